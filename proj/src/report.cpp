#include "phinil/report.hpp"

#include <algorithm>

namespace phinil {

namespace {

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

bool key_less(const std::string& a, const std::string& b) {
  if (all_digits(a) && all_digits(b)) {
    if (a.size() != b.size()) return a.size() < b.size();
  }
  return a < b;
}

nlohmann::ordered_json reorder(const Json& j) {
  if (j.is_object()) {
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    std::sort(keys.begin(), keys.end(), key_less);
    nlohmann::ordered_json out = nlohmann::ordered_json::object();
    for (const auto& k : keys) out[k] = reorder(j.at(k));
    return out;
  }
  if (j.is_array()) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& v : j) out.push_back(reorder(v));
    return out;
  }
  return nlohmann::ordered_json(j);
}

}  // namespace

Json to_json(const GroupProfile& p) {
  Json hist = Json::object();
  for (const auto& [order, count] : p.histogram) hist[std::to_string(order)] = count;
  return Json{{"order", p.order}, {"exponent", p.exponent}, {"phi", p.phi}, {"histogram", hist}};
}

Json to_json(const TheoremReport& r) {
  Json j{{"group", r.group},
         {"order", r.order},
         {"nilpotent", r.nilpotent},
         {"nilpotency_class", r.nilpotent ? Json(r.nilpotency_class) : Json(nullptr)},
         {"sections_checked", r.sections_checked},
         {"quotient_crosschecks", r.quotient_crosschecks},
         {"all_sections_phi_nonzero", r.all_sections_phi_nonzero},
         {"condition2", r.condition2},
         {"condition3", r.condition3},
         {"consistent", r.consistent()},
         {"elapsed_ms", r.elapsed_ms}};
  if (r.witness) {
    j["witness"] = Json{{"section", r.witness->id()}, {"profile", to_json(r.witness->profile)}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json to_json(const SchmidtCertificate& c) {
  Json checklist = Json::object();
  for (const auto& [name, ok] : c.checklist) checklist[name] = ok;
  return Json{{"p", c.p},
              {"q", c.q},
              {"m", c.m},
              {"n", c.n},
              {"r", c.r},
              {"y", c.y},
              {"order_P", c.P.order()},
              {"order_Q", c.Q.order()},
              {"order_Z", c.Z.order()},
              {"order_Phi", c.Phi.order()},
              {"order_Gprime", c.Gprime.order()},
              {"P_abelian", c.p_abelian},
              {"quotient_order", c.quotient_S ? c.quotient_S->order() : 0},
              {"quotient_subgroups", c.quotient_subgroup_count},
              {"checklist", checklist},
              {"passed", c.all_passed()}};
}

Json to_json(const FamilyCheck& c) {
  return Json{{"instance", c.instance},
              {"order", c.order},
              {"phi", c.phi},
              {"expect_phi_zero", c.expect_zero},
              {"pass", c.pass}};
}

Json to_json(const SuiteEntry& e) {
  Json j{{"spec", e.spec}, {"failure", e.failure}};
  if (!e.error.empty()) {
    j["error"] = e.error;
    j["error_kind"] = e.error_kind;
  }
  if (e.report) {
    j["report"] = to_json(*e.report);
    j["schmidt"] = e.schmidt;
    j["certificate"] = e.certificate ? to_json(*e.certificate) : Json(nullptr);
    if (e.family_expect_zero) {
      j["family"] = Json{{"expect_phi_zero", *e.family_expect_zero}, {"pass", e.family_pass}};
    }
  }
  return j;
}

Json to_json(const SuiteReport& r) {
  Json reports = Json::array();
  for (const auto& e : r.entries) reports.push_back(to_json(e));
  return Json{{"reports", reports},
              {"summary",
               {{"groups", r.entries.size()},
                {"failures", r.failures},
                {"disagreements", r.disagreements},
                {"errors", r.errors},
                {"wall_time", r.wall_time_s}}}};
}

Json lattice_summary(const SubgroupLattice& lattice) {
  Json by_order = Json::object();
  std::size_t normal = 0;
  for (const auto& h : lattice.subgroups()) {
    auto key = std::to_string(h.order());
    by_order[key] = by_order.value(key, 0) + 1;
    if (h.normal() == Tri::yes) ++normal;
  }
  return Json{{"count", lattice.size()},
              {"counts_by_order", by_order},
              {"normal", normal},
              {"maximal", maximal_within(lattice, lattice.whole_index()).size()}};
}

std::string dump_sorted(const Json& j, int indent) { return reorder(j).dump(indent); }

Json strip_timing(Json j) {
  if (j.is_object()) {
    for (const char* k : kTimingKeys) j.erase(k);
    for (auto& item : j.items()) item.value() = strip_timing(item.value());
  } else if (j.is_array()) {
    for (auto& v : j) v = strip_timing(v);
  }
  return j;
}

}  // namespace phinil
