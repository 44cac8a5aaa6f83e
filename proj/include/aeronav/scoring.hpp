#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "aeronav/errors.hpp"
#include "aeronav/memory_graph.hpp"

namespace aeronav {

/// Probability floor keeping log-affinities finite.
inline constexpr double kScoreFloor = 1e-4;

/// Lowercase, trim outer whitespace, collapse inner runs, strip one leading
/// article. Used for caption/landmark matching everywhere.
inline std::string normalize_phrase(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    bool in_space = true;
    for (char ch : s) {
        const unsigned char c = static_cast<unsigned char>(ch);
        if (std::isspace(c)) {
            if (!in_space) out.push_back(' ');
            in_space = true;
        } else {
            out.push_back(static_cast<char>(std::tolower(c)));
            in_space = false;
        }
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    for (const char* article : {"the ", "an ", "a "}) {
        const std::size_t len = std::string(article).size();
        if (out.rfind(article, 0) == 0) {
            out.erase(0, len);
            break;
        }
    }
    return out;
}

inline bool phrases_match(const std::string& a, const std::string& b) {
    return normalize_phrase(a) == normalize_phrase(b);
}

/// Pluggable node/landmark affinity. Scores are log-probabilities:
/// finite, <= 0, with exp(score) in (0, 1].
class ScorePort {
public:
    virtual ~ScorePort() = default;
    virtual std::string backend_name() const = 0;
    virtual double score(const MemoryNode& node, const std::string& landmark) const = 0;
};

/// log(1 - floor) when the landmark string-matches any caption after
/// normalization, log(floor) otherwise.
inline double oracle_score(const std::set<std::string>& captions, const std::string& landmark,
                           double floor = kScoreFloor) {
    const std::string target = normalize_phrase(landmark);
    for (const auto& caption : captions) {
        if (normalize_phrase(caption) == target) return std::log(1.0 - floor);
    }
    return std::log(floor);
}

class OracleScorer final : public ScorePort {
public:
    explicit OracleScorer(double floor = kScoreFloor) : floor_(floor) {}
    std::string backend_name() const override { return "oracle"; }
    double score(const MemoryNode& node, const std::string& landmark) const override {
        return oracle_score(node.captions, landmark, floor_);
    }

private:
    double floor_;
};

inline double cosine_similarity(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size())
        throw ScoringError("embedding dimension mismatch: " + std::to_string(a.size()) + " vs " +
                           std::to_string(b.size()));
    double dot = 0.0, na = 0.0, nb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        dot += a[i] * b[i];
        na += a[i] * a[i];
        nb += b[i] * b[i];
    }
    if (na == 0.0 || nb == 0.0) throw ScoringError("zero-norm embedding");
    return dot / (std::sqrt(na) * std::sqrt(nb));
}

/// Cosine similarity mapped to (0, 1] via (1 + cos)/2, floored, logged.
inline double embedding_score(const std::vector<double>& node_embedding,
                              const std::vector<double>& landmark_embedding,
                              double floor = kScoreFloor) {
    const double affinity = (1.0 + cosine_similarity(node_embedding, landmark_embedding)) / 2.0;
    return std::log(std::max(affinity, floor));
}

/// Embedding table: phrase -> vector, loaded from a versioned JSON file
/// (see EmbeddingTable::from_json).
class EmbeddingTable {
public:
    static constexpr int kFormatVersion = 1;

    void insert(const std::string& phrase, std::vector<double> vec) {
        table_[normalize_phrase(phrase)] = std::move(vec);
    }

    const std::vector<double>& lookup(const std::string& phrase) const {
        auto it = table_.find(normalize_phrase(phrase));
        if (it == table_.end()) throw ScoringError("no embedding for phrase '" + phrase + "'");
        return it->second;
    }

    static EmbeddingTable from_json(const nlohmann::json& doc) {
        if (!doc.contains("format_version") || doc["format_version"].get<int>() != kFormatVersion)
            throw ParseError("unsupported embedding table format_version");
        EmbeddingTable t;
        for (const auto& [phrase, vec] : doc.at("phrases").items())
            t.insert(phrase, vec.get<std::vector<double>>());
        return t;
    }

    nlohmann::json to_json() const {
        nlohmann::json doc;
        doc["format_version"] = kFormatVersion;
        auto& phrases = doc["phrases"] = nlohmann::json::object();
        for (const auto& [phrase, vec] : table_) phrases[phrase] = vec;
        return doc;
    }

private:
    std::map<std::string, std::vector<double>> table_;
};

class EmbeddingScorer final : public ScorePort {
public:
    explicit EmbeddingScorer(EmbeddingTable table, double floor = kScoreFloor)
        : table_(std::move(table)), floor_(floor) {}

    std::string backend_name() const override { return "embedding"; }

    double score(const MemoryNode& node, const std::string& landmark) const override {
        if (!node.embedding)
            throw ScoringError("node " + std::to_string(node.id) + " has no embedding");
        return embedding_score(*node.embedding, table_.lookup(landmark), floor_);
    }

private:
    EmbeddingTable table_;
    double floor_;
};

}  // namespace aeronav
