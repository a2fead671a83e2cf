#include "mzi/report_io.hpp"

#include <json.hpp>
#include <sstream>

namespace mzi {

namespace {

using Json = nlohmann::ordered_json;

Json params_json(const ReportParams& p) {
  Json j = Json::object();
  auto put = [&j](const char* key, const std::optional<int>& v) {
    j[key] = v ? Json(*v) : Json(nullptr);
  };
  put("n", p.n);
  put("k", p.k);
  put("p", p.p);
  put("n_max", p.n_max);
  j["kind"] = p.kind.empty() ? Json(nullptr) : Json(p.kind);
  j["m"] = p.m ? Json(*p.m) : Json(nullptr);
  return j;
}

Json report_json(const VerificationReport& r) {
  Json j;
  j["suite"] = r.suite;
  j["params"] = params_json(r.params);
  j["status"] = status_name(r.status);
  j["expected_source"] = r.expected_source;
  j["expected"] = r.expected;
  j["observed"] = r.observed;
  j["witnesses"] = r.witnesses;
  j["class_size"] = r.class_size;
  j["instances"] = r.instances;
  j["findings"] = r.findings;
  j["details"] = r.details;
  j["runtime_ms"] = r.runtime_ms ? Json(*r.runtime_ms) : Json(nullptr);
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string opt(const std::optional<int>& v) { return v ? std::to_string(*v) : ""; }

}  // namespace

std::string to_json(const VerificationReport& report, int indent) {
  return report_json(report).dump(indent);
}

std::string to_json(const std::vector<VerificationReport>& reports, int indent) {
  Json arr = Json::array();
  for (const auto& r : reports) arr.push_back(report_json(r));
  return arr.dump(indent);
}

std::string to_json(const ExtremalReport& report, int indent) {
  Json j;
  j["class"] = class_kind_name(report.constraint.kind);
  j["n"] = report.constraint.n;
  j["bound"] = report.constraint.bound;
  j["index"] = index_name(report.index);
  j["direction"] = direction_name(report.direction);
  j["value"] = report.value.str();
  Json w = Json::array();
  for (const auto& c : report.witnesses) w.push_back(c.bytes);
  j["witnesses"] = w;
  j["class_size"] = report.class_size;
  return j.dump(indent);
}

void write_csv(std::ostream& out, const std::vector<VerificationReport>& reports) {
  out << "suite,n,k,p,n_max,kind,m,status,class_size,instances,details\n";
  for (const auto& r : reports) {
    std::ostringstream m;
    if (r.params.m) m << *r.params.m;
    out << csv_field(r.suite) << ',' << opt(r.params.n) << ',' << opt(r.params.k) << ','
        << opt(r.params.p) << ',' << opt(r.params.n_max) << ',' << csv_field(r.params.kind)
        << ',' << m.str() << ',' << status_name(r.status) << ',' << r.class_size << ','
        << r.instances << ',' << csv_field(r.details) << '\n';
  }
}

void write_csv(std::ostream& out, const ExtremalReport& report) {
  out << "class,n,bound,index,direction,value,class_size,witnesses\n";
  std::string witnesses;
  for (const auto& c : report.witnesses) {
    if (!witnesses.empty()) witnesses += ' ';
    witnesses += c.bytes;
  }
  out << class_kind_name(report.constraint.kind) << ',' << report.constraint.n << ','
      << report.constraint.bound << ',' << index_name(report.index) << ','
      << direction_name(report.direction) << ',' << report.value.str() << ','
      << report.class_size << ',' << csv_field(witnesses) << '\n';
}

}  // namespace mzi
