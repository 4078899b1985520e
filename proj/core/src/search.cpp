#include "tarski/search.hpp"

#include <algorithm>
#include <chrono>
#include <thread>

namespace tarski {

namespace {

struct Uses {
  bool b = false;
  bool d = false;
};

void collect_uses(const Formula& f, Uses& u) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      if (f.atom_value().relation == Relation::Between) u.b = true;
      if (f.atom_value().relation == Relation::Congruent) u.d = true;
      return;
    case Formula::Kind::Not:
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: collect_uses(f.body(), u); return;
    default:
      collect_uses(f.lhs(), u);
      collect_uses(f.rhs(), u);
  }
}

struct Check {
  CompiledFormula formula;
  bool want;
};

struct Plan {
  std::vector<Check> b_only;
  std::vector<Check> d_only;
  std::vector<Check> mixed;
  Uses uses;

  static bool passes(const std::vector<Check>& checks, const FiniteModel& m, std::vector<int>& scratch) {
    for (const Check& c : checks)
      if (c.formula.eval(m, scratch) != c.want) return false;
    return true;
  }
};

Plan make_plan(const std::vector<NamedFormula>& required, const std::optional<NamedFormula>& forbidden) {
  Plan p;
  auto add = [&](const NamedFormula& nf, bool want) {
    std::set<std::string> free = free_variables(nf.sentence);
    Formula closed = Formula::forall_of(std::vector<std::string>(free.begin(), free.end()), nf.sentence);
    Uses u;
    collect_uses(closed, u);
    p.uses.b = p.uses.b || u.b;
    p.uses.d = p.uses.d || u.d;
    Check c{CompiledFormula(closed, {}), want};
    if (u.b && u.d)
      p.mixed.push_back(std::move(c));
    else if (u.d)
      p.d_only.push_back(std::move(c));
    else
      p.b_only.push_back(std::move(c));
  };
  for (const auto& nf : required) add(nf, true);
  if (forbidden) add(*forbidden, false);
  // Cheapest sentences first so most tables are discarded early.
  auto by_cost = [](const Check& x, const Check& y) { return x.formula.binder_count() < y.formula.binder_count(); };
  std::stable_sort(p.b_only.begin(), p.b_only.end(), by_cost);
  std::stable_sort(p.d_only.begin(), p.d_only.end(), by_cost);
  std::stable_sort(p.mixed.begin(), p.mixed.end(), by_cost);
  return p;
}

void decode(std::vector<std::uint8_t>& table, std::uint64_t mask) {
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = static_cast<std::uint8_t>((mask >> i) & 1U);
}

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void fill_random(std::vector<std::uint8_t>& table, std::uint64_t& state) {
  std::uint64_t word = 0;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (i % 64 == 0) word = splitmix64(state);
    table[i] = static_cast<std::uint8_t>((word >> (i % 64)) & 1U);
  }
}

template <class Fn>
void run_workers(unsigned workers, Fn&& fn) {
  if (workers <= 1) {
    fn(0U);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(fn, w);
  for (auto& t : pool) t.join();
}

std::vector<std::vector<std::uint8_t>> kept_tables(bool used, std::size_t bits, const std::vector<Check>& checks,
                                                   FiniteModel probe, bool is_b, std::uint64_t& total) {
  std::vector<std::vector<std::uint8_t>> kept;
  std::vector<int> scratch;
  std::uint64_t count = used ? (std::uint64_t{1} << bits) : 1;
  total = count;
  auto& table = is_b ? probe.b_table : probe.d_table;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    decode(table, mask);
    if (Plan::passes(checks, probe, scratch)) kept.push_back(table);
  }
  return kept;
}

}  // namespace

SearchResult search_finite_models(const std::vector<NamedFormula>& required,
                                  const std::optional<NamedFormula>& forbidden, int max_size,
                                  const SearchBudget& budget) {
  auto t0 = std::chrono::steady_clock::now();
  if (max_size < 1) throw Error("max size must be at least 1");
  if (budget.mode == SearchMode::Exhaustive && max_size > 2)
    throw Error("exhaustive search supports sizes up to 2; use sampled mode for size " + std::to_string(max_size));
  if (budget.mode == SearchMode::Sampled && max_size > 4) throw Error("sampled search supports sizes up to 4");

  Plan plan = make_plan(required, forbidden);
  const unsigned workers = std::max(1U, budget.workers);
  SearchResult result;
  result.stats.mode = budget.mode;
  result.stats.b_enumerated = plan.uses.b;
  result.stats.d_enumerated = plan.uses.d;
  std::uint64_t remaining = budget.max_pairs == 0 ? UINT64_MAX : budget.max_pairs;

  auto record = [&](std::vector<FiniteModel>&& found, SizeStats& st) {
    st.models = found.size();
    result.stats.models_found += found.size();
    for (auto& m : found) {
      if (result.models.size() >= budget.max_models) {
        result.stats.models_truncated = true;
        break;
      }
      result.models.push_back(std::move(m));
    }
  };

  if (budget.mode == SearchMode::Exhaustive) {
    for (int n = 1; n <= max_size; ++n) {
      SizeStats st;
      st.size = n;
      FiniteModel base = FiniteModel::empty(n);
      auto bs = kept_tables(plan.uses.b, base.b_table.size(), plan.b_only, base, true, st.b_tables);
      auto ds = kept_tables(plan.uses.d, base.d_table.size(), plan.d_only, base, false, st.d_tables);
      st.b_kept = bs.size();
      st.d_kept = ds.size();

      std::uint64_t pairs = st.b_kept * st.d_kept;
      std::uint64_t limit = pairs;
      if (pairs > remaining) {
        limit = remaining;
        result.stats.budget_exceeded = true;
      }
      remaining -= limit;
      st.pairs_checked = limit;

      std::vector<std::vector<std::pair<std::size_t, std::size_t>>> hits(workers);
      run_workers(workers, [&](unsigned w) {
        FiniteModel m = base;
        std::vector<int> scratch;
        for (std::size_t bi = w; bi < bs.size(); bi += workers) {
          m.b_table = bs[bi];
          for (std::size_t di = 0; di < ds.size(); ++di) {
            if (bi * ds.size() + di >= limit) break;
            m.d_table = ds[di];
            if (Plan::passes(plan.mixed, m, scratch)) hits[w].emplace_back(bi, di);
          }
        }
      });
      std::vector<std::pair<std::size_t, std::size_t>> all;
      for (auto& h : hits) all.insert(all.end(), h.begin(), h.end());
      std::sort(all.begin(), all.end());
      std::vector<FiniteModel> found;
      for (auto [bi, di] : all) {
        FiniteModel m = base;
        m.b_table = bs[bi];
        m.d_table = ds[di];
        found.push_back(std::move(m));
      }
      record(std::move(found), st);
      result.stats.sizes.push_back(st);
    }
  } else {
    const int n = max_size;
    SizeStats st;
    st.size = n;
    FiniteModel base = FiniteModel::empty(n);
    std::uint64_t count = budget.samples;
    if (count > remaining) {
      count = remaining;
      result.stats.budget_exceeded = true;
    }
    st.pairs_checked = count;
    st.b_tables = st.d_tables = count;

    std::vector<std::vector<std::uint64_t>> hits(workers);
    std::vector<std::uint64_t> b_kept(workers, 0), d_kept(workers, 0);
    run_workers(workers, [&](unsigned w) {
      FiniteModel m = base;
      std::vector<int> scratch;
      for (std::uint64_t i = w; i < count; i += workers) {
        std::uint64_t state = budget.seed ^ (i * 0xd1b54a32d192ed03ULL);
        if (plan.uses.b) fill_random(m.b_table, state);
        if (plan.uses.d) fill_random(m.d_table, state);
        bool b_ok = Plan::passes(plan.b_only, m, scratch);
        bool d_ok = Plan::passes(plan.d_only, m, scratch);
        b_kept[w] += b_ok;
        d_kept[w] += d_ok;
        if (b_ok && d_ok && Plan::passes(plan.mixed, m, scratch)) hits[w].push_back(i);
      }
    });
    for (unsigned w = 0; w < workers; ++w) {
      st.b_kept += b_kept[w];
      st.d_kept += d_kept[w];
    }
    std::vector<std::uint64_t> all;
    for (auto& h : hits) all.insert(all.end(), h.begin(), h.end());
    std::sort(all.begin(), all.end());
    std::vector<FiniteModel> found;
    for (std::uint64_t i : all) {
      FiniteModel m = base;
      std::uint64_t state = budget.seed ^ (i * 0xd1b54a32d192ed03ULL);
      if (plan.uses.b) fill_random(m.b_table, state);
      if (plan.uses.d) fill_random(m.d_table, state);
      found.push_back(std::move(m));
    }
    record(std::move(found), st);
    result.stats.sizes.push_back(st);
  }
  result.stats.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return result;
}

}  // namespace tarski
