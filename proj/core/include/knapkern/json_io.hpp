#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "knapkern/composition.hpp"
#include "knapkern/kernel.hpp"
#include "knapkern/types.hpp"

namespace knapkern {

// JSON instance formats. Big integers are decimal strings. Parsers throw
// Error(schema) for malformed documents and Error(invariant) for
// well-formed documents that violate a domain invariant.

std::string to_json(const KnapsackInstance& inst, bool strip_labels = false);
std::string to_json(const RestrictedSubsetSumInstance& inst);
std::string to_json(const X3CInstance& inst);
std::string to_json(const SubsetSumInstance& inst);

KnapsackInstance parse_knapsack(std::string_view text);
RestrictedSubsetSumInstance parse_rss(std::string_view text);
X3CInstance parse_x3c(std::string_view text);
SubsetSumInstance parse_subset_sum(std::string_view text);

// Value of the top-level "kind" field; Error(schema) if absent.
std::string instance_kind(std::string_view text);

// {"t","n","X","B","Y","Z","T","W","P"} plus the pre-padding input count.
std::string composition_metadata_json(const ComposedInstance& composed);

// {"r","branch","input_bits","output_bits"}
std::string kernel_report_json(const KernelReport& report);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace knapkern
