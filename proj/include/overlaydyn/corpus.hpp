#pragma once

#include <cstddef>
#include <filesystem>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "overlaydyn/errors.hpp"

namespace overlaydyn {

using DocId = std::string;
using DocSet = std::set<DocId>;

/// One publication record. Categories and references are kept sorted and
/// de-duplicated; self-references are dropped at construction.
struct DocumentRecord {
    DocId id;
    int year = 0;
    std::vector<std::string> categories;
    std::vector<DocId> references;

    void normalize();
};

class DocumentStore {
public:
    /// Parse a JSONL corpus file (one object per line: id, year, categories, references).
    static DocumentStore fromJsonl(const std::filesystem::path& path);

    void insert(DocumentRecord record);

    std::size_t size() const { return docs_.size(); }
    bool contains(const DocId& id) const { return index_.count(id) != 0; }
    const DocumentRecord& get(const DocId& id) const;
    const std::vector<DocumentRecord>& docs() const { return docs_; }

    DocSet allIds() const;
    int minYear() const;  // throws Error on empty store
    int maxYear() const;

private:
    std::vector<DocumentRecord> docs_;
    std::unordered_map<DocId, std::size_t> index_;
};

/// Directed citing -> cited graph restricted to documents inside the store.
class CitationGraph {
public:
    static CitationGraph build(const DocumentStore& store);

    std::size_t nodeCount() const { return nodes_.size(); }
    std::size_t edgeCount() const { return edgeCount_; }
    /// References that pointed outside the store and were excluded.
    std::size_t danglingReferenceCount() const { return danglingRefs_; }

    bool hasNode(const DocId& id) const { return inEdges_.count(id) != 0; }

    /// All documents citing at least one member of `targets`. A target that
    /// cites another target is included. Throws UnknownDoc for targets
    /// outside the graph.
    DocSet citingSet(const DocSet& targets) const;

private:
    DocSet nodes_;
    std::unordered_map<DocId, std::vector<DocId>> inEdges_;  // cited -> citers
    std::size_t edgeCount_ = 0;
    std::size_t danglingRefs_ = 0;
};

struct ExpansionRow {
    std::string generation;
    std::size_t sourceDocs = 0;
    std::size_t references = 0;        // pooled with one count per citing doc
    std::size_t uniqueReferences = 0;
    int threshold = 0;
    std::size_t relevantRetrievable = 0;  // = size of the next generation
};

struct ExpansionReport {
    std::vector<ExpansionRow> rows;
    std::size_t total = 0;  // sum of sourceDocs over rows
};

struct ExpansionResult {
    DocSet corpus;
    std::vector<DocSet> generations;
    ExpansionReport report;
};

/// Threshold-driven snowball growth: generation k+1 collects store-resident
/// references of generation k whose citation frequency within that
/// generation meets thresholds[min(k, last)]. Stops on an empty generation
/// or after maxGenerations rounds.
ExpansionResult snowballExpand(const DocumentStore& store, const DocSet& seed,
                               const std::vector<int>& thresholds, int maxGenerations);

/// Documents published exactly in `year`.
DocSet cohort(const DocumentStore& store, int year);
DocSet cohort(const DocumentStore& store, const DocSet& subset, int year);

/// Documents published in any year <= `year`.
DocSet cumulativeCohort(const DocumentStore& store, int year);
DocSet cumulativeCohort(const DocumentStore& store, const DocSet& subset, int year);

}  // namespace overlaydyn
