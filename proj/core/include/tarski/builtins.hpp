#pragma once

#include "tarski/kernel.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tarski {

/// Catalog order: lemma_abab, lemma_cdab, lemma_abb, lemma_sb, lemma_re,
/// lemma_fs_implies_fsp, lemma_fsp_implies_fs, theorem_a_from_aprime,
/// theorem_aprime_from_a, op_from_opp_given_sb, opp_from_op_given_sb.
const std::vector<std::string>& builtin_names();

/// Source text of a builtin, in the derivation file format.
std::string_view builtin_script(std::string_view name);

/// Throws Error listing the catalog when `name` is unknown.
Derivation builtin_derivation(std::string_view name);

using NamedCheck = std::pair<std::string, CheckResult>;

std::vector<NamedCheck> check_derivations(const std::vector<Derivation>& ds);
std::vector<NamedCheck> check_all_builtins();

}  // namespace tarski
