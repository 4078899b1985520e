#include "tarski/report.hpp"

#include "json.hpp"

#include <cstdio>
#include <sstream>

namespace tarski {

using nlohmann::ordered_json;

namespace {

std::string ms(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", v);
  return buf;
}

}  // namespace

std::string to_record(const ModelCheckReport& r, const RecordOptions& opt) {
  ordered_json j;
  j["kind"] = "model-check";
  j["axiom"] = ascii_name(r.axiom);
  j["model"] = r.model;
  j["status"] = std::string(status_name(r.status));
  j["samples"] = r.samples;
  j["seed"] = r.seed ? ordered_json(*r.seed) : ordered_json(nullptr);
  if (r.status == CheckStatus::Refuted) {
    ordered_json ce = ordered_json::object();
    for (const auto& [v, p] : r.counterexample) ce[v] = to_string(p);
    j["counterexample"] = ce;
  }
  if (!r.reason.empty()) j["reason"] = r.reason;
  if (r.approximate) j["approximate"] = true;
  if (opt.timing) j["elapsed_ms"] = r.elapsed_ms;
  return j.dump();
}

std::string to_text(const ModelCheckReport& r, const RecordOptions& opt) {
  std::ostringstream out;
  out << ascii_name(r.axiom) << " in " << r.model << ": " << status_name(r.status);
  if (r.status == CheckStatus::VerifiedOnSamples) {
    out << " (" << r.samples << " samples";
    if (r.seed) out << ", seed " << *r.seed;
    out << ")";
  }
  if (r.approximate) out << " [approximate]";
  if (!r.reason.empty()) out << " (" << r.reason << ")";
  if (r.status == CheckStatus::Refuted) {
    out << "\n  counterexample:";
    for (const auto& [v, p] : r.counterexample) out << " " << v << "=" << to_string(p);
  }
  if (opt.timing) out << "  [" << ms(r.elapsed_ms) << " ms]";
  return out.str();
}

std::string to_record(const NamedCheck& c) {
  ordered_json j;
  j["kind"] = "derivation";
  j["name"] = c.first;
  j["verdict"] = c.second.accepted() ? "accepted" : "rejected";
  if (!c.second.accepted()) {
    j["line"] = c.second.failing_line ? ordered_json(*c.second.failing_line) : ordered_json(nullptr);
    j["reason"] = c.second.reason;
  }
  return j.dump();
}

std::string to_text(const NamedCheck& c) {
  std::ostringstream out;
  out << c.first << ": ";
  if (c.second.accepted()) {
    out << "accepted";
  } else {
    out << "rejected";
    if (c.second.failing_line) out << " at line " << *c.second.failing_line;
    out << ": " << c.second.reason;
  }
  return out.str();
}

std::string to_record(const SearchStats& s, const RecordOptions& opt) {
  ordered_json j;
  j["kind"] = "search-stats";
  j["mode"] = s.mode == SearchMode::Exhaustive ? "exhaustive" : "sampled";
  ordered_json sizes = ordered_json::array();
  for (const auto& st : s.sizes) {
    ordered_json e;
    e["size"] = st.size;
    e["b_tables"] = st.b_tables;
    e["b_kept"] = st.b_kept;
    e["d_tables"] = st.d_tables;
    e["d_kept"] = st.d_kept;
    e["pairs_checked"] = st.pairs_checked;
    e["models"] = st.models;
    sizes.push_back(e);
  }
  j["sizes"] = sizes;
  j["models_found"] = s.models_found;
  j["budget_exceeded"] = s.budget_exceeded;
  j["models_truncated"] = s.models_truncated;
  j["b_enumerated"] = s.b_enumerated;
  j["d_enumerated"] = s.d_enumerated;
  if (opt.timing) j["elapsed_ms"] = s.elapsed_ms;
  return j.dump();
}

std::string to_text(const SearchStats& s, const RecordOptions& opt) {
  std::ostringstream out;
  out << (s.mode == SearchMode::Exhaustive ? "exhaustive" : "sampled") << " search: " << s.models_found
      << " model(s)";
  if (s.budget_exceeded) out << " [budget exceeded: search incomplete]";
  if (s.models_truncated) out << " [model list truncated]";
  if (!s.b_enumerated) out << "\n  B not mentioned: fixed empty";
  if (!s.d_enumerated) out << "\n  D not mentioned: fixed empty";
  for (const auto& st : s.sizes) {
    out << "\n  size " << st.size << ": B " << st.b_kept << "/" << st.b_tables << ", D " << st.d_kept << "/"
        << st.d_tables << ", pairs " << st.pairs_checked << ", models " << st.models;
  }
  if (opt.timing) out << "\n  elapsed " << ms(s.elapsed_ms) << " ms";
  return out.str();
}

std::string model_record(const FiniteModel& m) {
  ordered_json j;
  j["kind"] = "finite-model";
  j["size"] = m.size;
  ordered_json b = ordered_json::array(), d = ordered_json::array();
  for (const auto& t : m.b_triples()) b.push_back(t);
  for (const auto& q : m.d_quadruples()) d.push_back(q);
  j["B"] = b;
  j["D"] = d;
  return j.dump();
}

}  // namespace tarski
