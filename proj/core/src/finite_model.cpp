#include "tarski/finite_model.hpp"

#include "tarski/parser.hpp"

#include <sstream>

namespace tarski {

FiniteModel FiniteModel::empty(int n) {
  if (n < 1) throw Error("finite model size must be at least 1");
  FiniteModel m;
  m.size = n;
  m.b_table.assign(static_cast<std::size_t>(n * n * n), 0);
  m.d_table.assign(static_cast<std::size_t>(n * n * n * n), 0);
  return m;
}

void FiniteModel::set_between(int a, int b, int c, bool v) { b_table[(a * size + b) * size + c] = v ? 1 : 0; }

void FiniteModel::set_congruent(int a, int b, int c, int d, bool v) {
  d_table[((a * size + b) * size + c) * size + d] = v ? 1 : 0;
}

std::vector<std::array<int, 3>> FiniteModel::b_triples() const {
  std::vector<std::array<int, 3>> out;
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b)
      for (int c = 0; c < size; ++c)
        if (between(a, b, c)) out.push_back({a, b, c});
  return out;
}

std::vector<std::array<int, 4>> FiniteModel::d_quadruples() const {
  std::vector<std::array<int, 4>> out;
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b)
      for (int c = 0; c < size; ++c)
        for (int d = 0; d < size; ++d)
          if (congruent(a, b, c, d)) out.push_back({a, b, c, d});
  return out;
}

std::string serialize(const FiniteModel& m) {
  std::ostringstream out;
  out << "size " << m.size << "\n";
  for (const auto& t : m.b_triples()) out << "B: " << t[0] << " " << t[1] << " " << t[2] << "\n";
  for (const auto& q : m.d_quadruples()) out << "D: " << q[0] << " " << q[1] << " " << q[2] << " " << q[3] << "\n";
  return out.str();
}

FiniteModel parse_finite_model(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::optional<FiniteModel> m;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream words(line);
    std::string head;
    if (!(words >> head) || head[0] == '#') continue;
    auto read_indices = [&](std::size_t k) {
      std::vector<int> v;
      int x;
      while (words >> x) v.push_back(x);
      if (!words.eof() || v.size() != k)
        throw ParseError(line_no, 1, "expected " + std::to_string(k) + " indices after '" + head + "'");
      for (int i : v)
        if (i < 0 || i >= m->size)
          throw ParseError(line_no, 1, "index " + std::to_string(i) + " out of range for size " + std::to_string(m->size));
      return v;
    };
    if (head == "size") {
      int n = 0;
      if (m || !(words >> n) || n < 1) throw ParseError(line_no, 1, "expected a single 'size n' line with n >= 1");
      m = FiniteModel::empty(n);
    } else if (head == "B:") {
      if (!m) throw ParseError(line_no, 1, "'size' must come first");
      auto v = read_indices(3);
      m->set_between(v[0], v[1], v[2]);
    } else if (head == "D:") {
      if (!m) throw ParseError(line_no, 1, "'size' must come first");
      auto v = read_indices(4);
      m->set_congruent(v[0], v[1], v[2], v[3]);
    } else {
      throw ParseError(line_no, 1, "unexpected '" + head + "'");
    }
  }
  if (!m) throw ParseError(line_no, 1, "missing 'size n' line");
  return *m;
}

CompiledFormula::CompiledFormula(const Formula& f, const std::vector<std::string>& slots) {
  std::vector<std::pair<std::string, int>> scope;
  for (std::size_t i = 0; i < slots.size(); ++i) scope.emplace_back(slots[i], static_cast<int>(i));
  slot_count_ = slots.size();
  root_ = build(f, scope);
}

int CompiledFormula::build(const Formula& f, std::vector<std::pair<std::string, int>>& scope) {
  auto slot_of = [&](const Term& t) {
    if (t.is_point()) throw Error("point constants cannot be evaluated in a finite model");
    for (auto it = scope.rbegin(); it != scope.rend(); ++it)
      if (it->first == t.name()) return it->second;
    throw Error("unassigned variable '" + t.name() + "'");
  };
  Node n{};
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      const Atom& a = f.atom_value();
      n.op = a.relation == Relation::Between ? Op::B : a.relation == Relation::Congruent ? Op::D : Op::Eq;
      for (std::size_t i = 0; i < a.args.size(); ++i) n.args[i] = slot_of(a.args[i]);
      break;
    }
    case Formula::Kind::Not:
      n.op = Op::Not;
      n.lhs = build(f.body(), scope);
      break;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      n.op = f.kind() == Formula::Kind::And ? Op::And : f.kind() == Formula::Kind::Or ? Op::Or : Op::Implies;
      n.lhs = build(f.lhs(), scope);
      n.rhs = build(f.rhs(), scope);
      break;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      n.op = f.kind() == Formula::Kind::Forall ? Op::Forall : Op::Exists;
      n.args[0] = static_cast<int>(slot_count_++);
      ++binders_;
      scope.emplace_back(f.bound_var(), n.args[0]);
      n.lhs = build(f.body(), scope);
      scope.pop_back();
      break;
    }
  }
  nodes_.push_back(n);
  return static_cast<int>(nodes_.size()) - 1;
}

bool CompiledFormula::run(int idx, const FiniteModel& m, std::vector<int>& v) const {
  const Node& n = nodes_[static_cast<std::size_t>(idx)];
  const auto& a = n.args;
  switch (n.op) {
    case Op::B: return m.between(v[a[0]], v[a[1]], v[a[2]]);
    case Op::D: return m.congruent(v[a[0]], v[a[1]], v[a[2]], v[a[3]]);
    case Op::Eq: return v[a[0]] == v[a[1]];
    case Op::Not: return !run(n.lhs, m, v);
    case Op::And: return run(n.lhs, m, v) && run(n.rhs, m, v);
    case Op::Or: return run(n.lhs, m, v) || run(n.rhs, m, v);
    case Op::Implies: return !run(n.lhs, m, v) || run(n.rhs, m, v);
    case Op::Forall:
      for (int x = 0; x < m.size; ++x) {
        v[a[0]] = x;
        if (!run(n.lhs, m, v)) return false;
      }
      return true;
    case Op::Exists:
      for (int x = 0; x < m.size; ++x) {
        v[a[0]] = x;
        if (run(n.lhs, m, v)) return true;
      }
      return false;
  }
  return false;
}

bool CompiledFormula::eval(const FiniteModel& m, std::vector<int>& values) const {
  if (values.size() < slot_count_) values.resize(slot_count_, 0);
  return run(root_, m, values);
}

bool eval_finite(const FiniteModel& m, const Formula& f, const FiniteAssignment& s) {
  std::vector<std::string> slots;
  std::vector<int> values;
  for (const auto& [name, v] : s) {
    if (v < 0 || v >= m.size) throw Error("value of '" + name + "' is outside the domain");
    slots.push_back(name);
    values.push_back(v);
  }
  CompiledFormula c(f, slots);
  return c.eval(m, values);
}

FiniteEval eval_formula_exhaustive(const FiniteModel& m, const Formula& f) {
  std::set<std::string> free = free_variables(f);
  Formula closed = Formula::forall_of(std::vector<std::string>(free.begin(), free.end()), f);

  std::vector<std::string> prefix;
  const Formula* cur = &closed;
  while (cur->kind() == Formula::Kind::Forall) {
    prefix.push_back(cur->bound_var());
    cur = &cur->body();
  }
  // Later binders of the same name shadow earlier ones; the compiled
  // scope lookup runs from the back, which gives the same resolution.
  CompiledFormula c(*cur, prefix);
  std::vector<int> values(c.slot_count(), 0);
  const std::size_t k = prefix.size();
  while (true) {
    if (!c.eval(m, values)) {
      FiniteAssignment s;
      for (std::size_t i = 0; i < k; ++i) s[prefix[i]] = values[i];
      return {false, s};
    }
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (++values[i] < m.size) break;
      values[i] = 0;
      if (i == 0) return {true, std::nullopt};
    }
    if (k == 0) return {true, std::nullopt};
  }
}

}  // namespace tarski
