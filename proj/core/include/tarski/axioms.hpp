#pragma once

#include "tarski/formula.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace tarski {

struct NamedFormula {
  std::string name;
  Formula sentence;
};

/// A named axiom system. The continuity schema is not a first-order
/// sentence, so it is carried as a marker next to the first-order members.
struct AxiomSystem {
  std::string name;
  std::vector<NamedFormula> first_order;
  std::vector<std::string> schemas;

  std::size_t size() const { return first_order.size() + schemas.size(); }
  /// First-order members in order, then schema markers.
  std::vector<std::string> member_names() const;
  bool contains(std::string_view member) const;
  const NamedFormula* find(std::string_view member) const;
};

inline constexpr std::string_view kContinuitySchema = "Co";

/// Canonical spelling for a name given in ASCII ("FS'", "Lo2", "CE2'") or
/// canonical form. Unknown names are returned unchanged.
std::string canonical_name(std::string_view name);
/// ASCII spelling of a canonical name.
std::string ascii_name(std::string_view name);

/// RE TE IE SC FS FS′ IB Pa Lo₂ Up₂ Eu SB OP OP′, in that order.
const std::vector<NamedFormula>& axiom_catalog();
std::vector<std::string> system_names();

/// Throws Error listing the available names when `name` is unknown.
const NamedFormula& get_axiom(std::string_view name);
const AxiomSystem& get_system(std::string_view name);

/// Resolves a comma-separated mix of system and axiom names into a list of
/// first-order sentences (schema markers are dropped).
std::vector<NamedFormula> resolve_formulas(std::string_view csv);

/// "name := formula" per line, ASCII names.
std::string export_catalog();

struct ContinuityInstance {
  Formula phi;
  std::string phi_var;
  Formula psi;
  std::string psi_var;
  Formula sentence;
};

/// First-order instance of the continuity schema. phi_var / psi_var are the
/// designated variables standing for membership in X / Y; any other free
/// variables become universally closed parameters. Throws Error if a
/// designated variable does not occur free in its formula.
ContinuityInstance instantiate_continuity(const Formula& phi, const std::string& phi_var, const Formula& psi,
                                          const std::string& psi_var);

/// Named instances used when model-checking continuity.
const std::vector<NamedFormula>& continuity_suite();

}  // namespace tarski
