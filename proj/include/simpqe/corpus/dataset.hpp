#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "simpqe/corpus/labels.hpp"

namespace simpqe {

struct SentencePair {
    std::string id;
    std::string original;
    std::string simplified;
    std::array<std::optional<AspectLabel>, kNumAspects> labels{};

    const std::optional<AspectLabel>& label(Aspect a) const { return labels[index_of(a)]; }
    std::optional<AspectLabel>& label(Aspect a) { return labels[index_of(a)]; }

    friend bool operator==(const SentencePair&, const SentencePair&) = default;
};

struct Dataset {
    std::vector<SentencePair> pairs;
    std::string source_path;

    /// Index of the pair with `id`, or nullopt.
    std::optional<std::size_t> find(const std::string& id) const;
};

enum class DatasetFormat { QatsTsv };

/// Canonical TSV: header `id original simplified grammaticality meaning simplicity overall`.
/// The four label columns may be blank, and may be omitted entirely from every row when the
/// header omits them.
Dataset load_dataset(const std::filesystem::path& path, DatasetFormat format = DatasetFormat::QatsTsv);
Dataset parse_dataset(std::string_view text, const std::string& source_name);
void write_dataset(std::ostream& out, const Dataset& ds);

/// Per-aspect percentage distribution; an aspect with no labelled pair maps to an empty map.
using LabelDistribution = std::map<AspectLabel, double>;
std::array<LabelDistribution, kNumAspects> dataset_stats(const Dataset& ds);

/// Aligned text: one row per aspect with GOOD/OK/BAD percentages at two decimals.
std::string render_stats(const std::array<LabelDistribution, kNumAspects>& stats);

/// Each fold lists pair ids in dataset order.
using Folds = std::vector<std::vector<std::string>>;

/// Stratified k-fold partition. Within each class the pairs are shuffled with `seed`, then
/// all classes (GOOD, OK, BAD in turn) are dealt round-robin over the folds with one running
/// counter, so fold sizes and per-class counts each differ by at most one.
Folds stratified_kfold(const Dataset& ds, Aspect aspect, std::size_t k, std::uint64_t seed);

}  // namespace simpqe
