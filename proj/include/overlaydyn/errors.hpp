#pragma once

#include <stdexcept>
#include <string>

namespace overlaydyn {

// Base class for all input-contract violations. CLI maps these to exit 2.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MalformedRow : Error {
    using Error::Error;
};
struct ValueOutOfRange : Error {
    using Error::Error;
};
struct AsymmetricInput : Error {
    using Error::Error;
};
struct DuplicateCategoryDeclaration : Error {
    using Error::Error;
};
struct UnknownCategory : Error {
    using Error::Error;
};
struct MalformedRecord : Error {
    using Error::Error;
};
struct DuplicateDocId : Error {
    using Error::Error;
};
struct UnknownDoc : Error {
    using Error::Error;
};
struct SeedNotInStore : Error {
    using Error::Error;
};

}  // namespace overlaydyn
