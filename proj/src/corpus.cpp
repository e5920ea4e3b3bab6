#include "overlaydyn/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <map>

#include <json.hpp>

namespace overlaydyn {

void DocumentRecord::normalize() {
    std::sort(categories.begin(), categories.end());
    categories.erase(std::unique(categories.begin(), categories.end()), categories.end());
    std::sort(references.begin(), references.end());
    references.erase(std::unique(references.begin(), references.end()), references.end());
    references.erase(std::remove(references.begin(), references.end(), id), references.end());
}

DocumentStore DocumentStore::fromJsonl(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open corpus file: " + path.string());

    DocumentStore store;
    std::string line;
    std::size_t lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw MalformedRecord("corpus line " + std::to_string(lineNo) + ": " + e.what());
        }
        DocumentRecord rec;
        try {
            rec.id = j.at("id").get<std::string>();
            rec.year = j.at("year").get<int>();
            rec.categories = j.value("categories", std::vector<std::string>{});
            rec.references = j.value("references", std::vector<std::string>{});
        } catch (const nlohmann::json::exception& e) {
            throw MalformedRecord("corpus line " + std::to_string(lineNo) + ": " + e.what());
        }
        if (rec.id.empty()) throw MalformedRecord("corpus line " + std::to_string(lineNo) + ": empty id");
        store.insert(std::move(rec));
    }
    return store;
}

void DocumentStore::insert(DocumentRecord record) {
    record.normalize();
    if (index_.count(record.id)) throw DuplicateDocId("duplicate doc id: " + record.id);
    index_.emplace(record.id, docs_.size());
    docs_.push_back(std::move(record));
}

const DocumentRecord& DocumentStore::get(const DocId& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw UnknownDoc("unknown doc id: " + id);
    return docs_[it->second];
}

DocSet DocumentStore::allIds() const {
    DocSet out;
    for (const auto& d : docs_) out.insert(d.id);
    return out;
}

int DocumentStore::minYear() const {
    if (docs_.empty()) throw Error("empty store has no year range");
    int y = std::numeric_limits<int>::max();
    for (const auto& d : docs_) y = std::min(y, d.year);
    return y;
}

int DocumentStore::maxYear() const {
    if (docs_.empty()) throw Error("empty store has no year range");
    int y = std::numeric_limits<int>::min();
    for (const auto& d : docs_) y = std::max(y, d.year);
    return y;
}

CitationGraph CitationGraph::build(const DocumentStore& store) {
    CitationGraph g;
    for (const auto& d : store.docs()) {
        g.nodes_.insert(d.id);
        g.inEdges_.emplace(d.id, std::vector<DocId>{});
    }
    for (const auto& d : store.docs()) {
        for (const auto& ref : d.references) {
            if (ref == d.id) continue;
            if (!store.contains(ref)) {
                ++g.danglingRefs_;
                continue;
            }
            g.inEdges_[ref].push_back(d.id);
            ++g.edgeCount_;
        }
    }
    return g;
}

DocSet CitationGraph::citingSet(const DocSet& targets) const {
    DocSet out;
    for (const auto& t : targets) {
        auto it = inEdges_.find(t);
        if (it == inEdges_.end()) throw UnknownDoc("citing_set target not in graph: " + t);
        out.insert(it->second.begin(), it->second.end());
    }
    return out;
}

ExpansionResult snowballExpand(const DocumentStore& store, const DocSet& seed,
                               const std::vector<int>& thresholds, int maxGenerations) {
    if (thresholds.empty()) throw Error("snowball_expand: thresholds must be non-empty");
    for (const auto& s : seed)
        if (!store.contains(s)) throw SeedNotInStore("seed doc not in store: " + s);

    ExpansionResult result;
    result.corpus = seed;
    result.generations.push_back(seed);

    for (int gen = 0; gen < maxGenerations; ++gen) {
        const DocSet& current = result.generations.back();
        const int threshold =
            thresholds[std::min<std::size_t>(static_cast<std::size_t>(gen), thresholds.size() - 1)];

        // Pool references of the current generation, one count per citing doc.
        std::map<DocId, std::size_t> frequency;
        std::size_t pooled = 0;
        for (const auto& id : current) {
            for (const auto& ref : store.get(id).references) {
                ++frequency[ref];
                ++pooled;
            }
        }

        DocSet relevant;
        for (const auto& [ref, count] : frequency) {
            if (count >= static_cast<std::size_t>(threshold) && store.contains(ref) &&
                !result.corpus.count(ref))
                relevant.insert(ref);
        }

        ExpansionRow row;
        row.generation = gen == 0 ? "initial" : "gen" + std::to_string(gen + 1);
        row.sourceDocs = current.size();
        row.references = pooled;
        row.uniqueReferences = frequency.size();
        row.threshold = threshold;
        row.relevantRetrievable = relevant.size();
        result.report.rows.push_back(row);
        result.report.total += row.sourceDocs;

        if (relevant.empty() || gen + 1 >= maxGenerations) break;
        result.corpus.insert(relevant.begin(), relevant.end());
        result.generations.push_back(std::move(relevant));
    }
    return result;
}

DocSet cohort(const DocumentStore& store, int year) {
    DocSet out;
    for (const auto& d : store.docs())
        if (d.year == year) out.insert(d.id);
    return out;
}

DocSet cohort(const DocumentStore& store, const DocSet& subset, int year) {
    DocSet out;
    for (const auto& id : subset)
        if (store.get(id).year == year) out.insert(id);
    return out;
}

DocSet cumulativeCohort(const DocumentStore& store, int year) {
    DocSet out;
    for (const auto& d : store.docs())
        if (d.year <= year) out.insert(d.id);
    return out;
}

DocSet cumulativeCohort(const DocumentStore& store, const DocSet& subset, int year) {
    DocSet out;
    for (const auto& id : subset)
        if (store.get(id).year <= year) out.insert(id);
    return out;
}

}  // namespace overlaydyn
