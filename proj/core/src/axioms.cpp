#include "tarski/axioms.hpp"

#include "tarski/parser.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace tarski {

namespace {

constexpr std::array<std::pair<std::string_view, std::string_view>, 7> kAliases{{
    {"FS'", "FS′"},
    {"Lo2", "Lo₂"},
    {"Up2", "Up₂"},
    {"OP'", "OP′"},
    {"CE2", "CE₂"},
    {"CE2'", "CE₂′"},
    {"A'", "A′"},
}};

struct AxiomText {
  std::string_view name;
  std::string_view text;
};

// clang-format off
constexpr std::array<AxiomText, 14> kAxiomTexts{{
  {"RE", "forall a b. D a b b a"},
  {"TE", "forall a b p q r s. (D a b p q & D a b r s -> D p q r s)"},
  {"IE", "forall a b c. (D a b c c -> = a b)"},
  {"SC", "forall a b c q. exists x. (B q a x & D a x b c)"},
  {"FS", "forall a b c d a' b' c' d'. (~= a b & B a b c & B a' b' c' & D a b a' b' & D b c b' c' & "
         "D a d a' d' & D b d b' d' -> D c d c' d')"},
  {"FS′", "forall a b c d a' b' c' d'. (~= a b & B a b c & B a' b' c' & D a b a' b' & D b c b' c' & "
          "D a d a' d' & D b d b' d' -> D d c c' d')"},
  {"IB", "forall a b. (B a b a -> = a b)"},
  {"Pa", "forall a b c p q. (B a p c & B b q c -> (exists x. (B p x b & B q x a)))"},
  {"Lo₂", "exists a b c. (~B a b c & ~B b c a & ~B c a b)"},
  {"Up₂", "forall a b c p q. (~= p q & D a p a q & D b p b q & D c p c q -> B a b c | B b c a | B c a b)"},
  {"Eu", "forall a b c d t. (B a d t & B b d c & ~= a d -> (exists x y. (B a b x & B a c y & B x t y)))"},
  {"SB", "forall a b c. (B a b c -> B c b a)"},
  {"OP", "forall a b c p q. (B a p c & B q c b -> (exists x. (B a x q & B x p b)))"},
  {"OP′", "forall a b c p q. exists x. (B a p c & B q c b -> B a x q & B b p x)"},
}};
// clang-format on

struct Library {
  std::vector<NamedFormula> catalog;
  std::vector<AxiomSystem> systems;
  std::vector<NamedFormula> continuity;
};

AxiomSystem make_system(std::string name, const std::vector<NamedFormula>& catalog,
                        std::initializer_list<std::string_view> members, bool with_continuity) {
  AxiomSystem s{std::move(name), {}, {}};
  for (std::string_view m : members) {
    auto it = std::find_if(catalog.begin(), catalog.end(), [&](const NamedFormula& nf) { return nf.name == m; });
    s.first_order.push_back(*it);
  }
  if (with_continuity) s.schemas.emplace_back(kContinuitySchema);
  return s;
}

const Library& library() {
  static const Library lib = [] {
    Library l;
    for (const auto& [name, text] : kAxiomTexts) l.catalog.push_back({std::string(name), parse_formula(text)});
    l.systems.push_back(make_system("CE₂", l.catalog,
                                    {"RE", "TE", "IE", "SC", "FS", "IB", "Pa", "Lo₂", "Up₂", "Eu"}, true));
    l.systems.push_back(
        make_system("CE₂′", l.catalog, {"TE", "IE", "SC", "FS′", "IB", "Pa", "Lo₂", "Up₂", "Eu"}, true));
    l.systems.push_back(make_system("A", l.catalog, {"RE", "TE", "IE", "SC", "FS", "IB", "Pa"}, false));
    l.systems.push_back(make_system("A′", l.catalog, {"TE", "IE", "SC", "FS′", "IB", "Pa"}, false));

    auto co = [&](std::string name, std::string_view phi, std::string_view phi_var, std::string_view psi,
                  std::string_view psi_var) {
      ContinuityInstance inst = instantiate_continuity(parse_formula(phi), std::string(phi_var),
                                                       parse_formula(psi), std::string(psi_var));
      l.continuity.push_back({std::move(name), inst.sentence});
    };
    co("Co[point]", "= x c", "x", "= y c", "y");
    co("Co[pair]", "= x p", "x", "= y q", "y");
    co("Co[segment]", "B p x q", "x", "= y q", "y");
    return l;
  }();
  return lib;
}

std::string join_names(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) out += (out.empty() ? "" : ", ") + n;
  return out;
}

}  // namespace

std::string canonical_name(std::string_view name) {
  for (const auto& [ascii, canon] : kAliases) {
    if (name == ascii) return std::string(canon);
  }
  return std::string(name);
}

std::string ascii_name(std::string_view name) {
  for (const auto& [ascii, canon] : kAliases) {
    if (name == canon) return std::string(ascii);
  }
  return std::string(name);
}

std::vector<std::string> AxiomSystem::member_names() const {
  std::vector<std::string> out;
  for (const auto& m : first_order) out.push_back(m.name);
  out.insert(out.end(), schemas.begin(), schemas.end());
  return out;
}

bool AxiomSystem::contains(std::string_view member) const {
  std::string canon = canonical_name(member);
  return find(canon) != nullptr || std::find(schemas.begin(), schemas.end(), canon) != schemas.end();
}

const NamedFormula* AxiomSystem::find(std::string_view member) const {
  std::string canon = canonical_name(member);
  for (const auto& m : first_order) {
    if (m.name == canon) return &m;
  }
  return nullptr;
}

const std::vector<NamedFormula>& axiom_catalog() { return library().catalog; }

std::vector<std::string> system_names() {
  std::vector<std::string> out;
  for (const auto& s : library().systems) out.push_back(s.name);
  return out;
}

const NamedFormula& get_axiom(std::string_view name) {
  std::string canon = canonical_name(name);
  for (const auto& nf : library().catalog) {
    if (nf.name == canon) return nf;
  }
  for (const auto& nf : library().continuity) {
    if (nf.name == canon) return nf;
  }
  std::vector<std::string> names;
  for (const auto& nf : library().catalog) names.push_back(ascii_name(nf.name));
  for (const auto& nf : library().continuity) names.push_back(nf.name);
  throw Error("unknown axiom '" + std::string(name) + "'; available: " + join_names(names));
}

const AxiomSystem& get_system(std::string_view name) {
  std::string canon = canonical_name(name);
  for (const auto& s : library().systems) {
    if (s.name == canon) return s;
  }
  std::vector<std::string> names;
  for (const auto& s : library().systems) names.push_back(ascii_name(s.name));
  throw Error("unknown axiom system '" + std::string(name) + "'; available: " + join_names(names));
}

std::vector<NamedFormula> resolve_formulas(std::string_view csv) {
  std::vector<NamedFormula> out;
  auto add = [&](const NamedFormula& nf) {
    bool dup = std::any_of(out.begin(), out.end(), [&](const NamedFormula& o) { return o.name == nf.name; });
    if (!dup) out.push_back(nf);
  };
  std::size_t start = 0;
  while (start <= csv.size()) {
    std::size_t end = csv.find(',', start);
    if (end == std::string_view::npos) end = csv.size();
    std::string_view item = csv.substr(start, end - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty()) {
      std::string canon = canonical_name(item);
      auto systems = system_names();
      if (std::find(systems.begin(), systems.end(), canon) != systems.end()) {
        for (const auto& m : get_system(canon).first_order) add(m);
      } else if (canon != kContinuitySchema) {
        add(get_axiom(canon));
      }
    }
    start = end + 1;
  }
  return out;
}

std::string export_catalog() {
  std::string out;
  for (const auto& nf : axiom_catalog()) out += ascii_name(nf.name) + " := " + render_formula(nf.sentence) + "\n";
  return out;
}

ContinuityInstance instantiate_continuity(const Formula& phi, const std::string& phi_var, const Formula& psi,
                                          const std::string& psi_var) {
  std::set<std::string> phi_free = free_variables(phi);
  std::set<std::string> psi_free = free_variables(psi);
  if (!phi_free.contains(phi_var)) {
    throw Error("continuity instance: designated variable '" + phi_var + "' is not free in phi");
  }
  if (!psi_free.contains(psi_var)) {
    throw Error("continuity instance: designated variable '" + psi_var + "' is not free in psi");
  }
  std::set<std::string> params;
  for (const auto& v : phi_free) {
    if (v != phi_var) params.insert(v);
  }
  for (const auto& v : psi_free) {
    if (v != psi_var) params.insert(v);
  }

  std::set<std::string> taken = params;
  auto pick = [&](const std::string& base) {
    std::string n = taken.contains(base) ? fresh_name(base, taken) : base;
    taken.insert(n);
    return n;
  };
  const std::string x = pick("x");
  const std::string y = pick("y");
  const std::string a = pick("a");
  const std::string b = pick("b");

  Formula members = Formula::conjunction(substitute(phi, phi_var, Term::var(x)), substitute(psi, psi_var, Term::var(y)));
  auto bounded = [&](Atom conclusion) {
    return Formula::forall_of({x, y}, Formula::implication(members, Formula::atom(std::move(conclusion))));
  };
  Formula hypothesis = Formula::exists(a, bounded(Atom::between(Term::var(a), Term::var(x), Term::var(y))));
  Formula conclusion = Formula::exists(b, bounded(Atom::between(Term::var(x), Term::var(b), Term::var(y))));
  Formula sentence = Formula::forall_of(std::vector<std::string>(params.begin(), params.end()),
                                        Formula::implication(hypothesis, conclusion));
  return {phi, phi_var, psi, psi_var, std::move(sentence)};
}

const std::vector<NamedFormula>& continuity_suite() { return library().continuity; }

}  // namespace tarski
