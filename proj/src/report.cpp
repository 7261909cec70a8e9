#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "hochkit/harness.hpp"
#include "json.hpp"

namespace hochkit {

namespace {

using nlohmann::ordered_json;

ordered_json values(const std::optional<std::vector<long>>& v) {
  if (!v) return nullptr;
  return ordered_json(*v);
}

std::string row(const std::optional<std::vector<long>>& v) {
  if (!v) return "-";
  std::string s;
  for (size_t i = 0; i < v->size(); ++i) s += (i ? "," : "") + std::to_string((*v)[i]);
  return s.empty() ? "[]" : s;
}

size_t width(const std::string& s) {
  return static_cast<size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

std::string pad(const std::string& s, size_t w) { return s + std::string(w > width(s) ? w - width(s) : 0, ' '); }

}  // namespace

bool Report::pass() const {
  return within_time() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::string to_json(const std::vector<Report>& reports, bool timings) {
  ordered_json root;
  root["schema"] = "hochkit/1";
  bool all = std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.pass(); });
  root["pass"] = all;
  ordered_json list = ordered_json::array();
  for (const auto& r : reports) {
    ordered_json j;
    j["id"] = r.id;
    j["command"] = r.command;
    ordered_json w = ordered_json::object();
    for (const auto& [k, v] : r.window) w[k] = v;
    j["window"] = w;
    ordered_json checks = ordered_json::array();
    for (const auto& c : r.checks) {
      ordered_json cj;
      cj["name"] = c.name;
      cj["expected"] = values(c.expected);
      cj["actual"] = values(c.actual);
      cj["pass"] = c.pass;
      if (!c.note.empty()) cj["note"] = c.note;
      checks.push_back(cj);
    }
    j["checks"] = checks;
    if (r.time_limit > 0) j["time_limit_seconds"] = r.time_limit;
    if (timings) j["seconds"] = std::round(r.seconds * 1000) / 1000;
    j["pass"] = r.pass();
    list.push_back(j);
  }
  root["reports"] = list;
  return root.dump(2) + "\n";
}

std::string to_table(const std::vector<Report>& reports) {
  std::ostringstream out;
  for (const auto& r : reports) {
    out << r.id << ": " << r.command;
    if (!r.window.empty()) {
      out << "  [";
      for (size_t i = 0; i < r.window.size(); ++i)
        out << (i ? ", " : "") << r.window[i].first << "=" << r.window[i].second;
      out << "]";
    }
    out << "\n";
    size_t wn = 5, we = 8, wa = 6;
    for (const auto& c : r.checks) {
      wn = std::max(wn, width(c.name));
      we = std::max(we, width(row(c.expected)));
      wa = std::max(wa, width(row(c.actual)));
    }
    out << "  " << pad("check", wn) << "  " << pad("expected", we) << "  " << pad("actual", wa) << "  status\n";
    for (const auto& c : r.checks) {
      out << "  " << pad(c.name, wn) << "  " << pad(row(c.expected), we) << "  " << pad(row(c.actual), wa) << "  "
          << (c.pass ? "pass" : "FAIL");
      if (!c.note.empty()) out << "  (" << c.note << ")";
      out << "\n";
    }
    out << "  time " << std::fixed << std::setprecision(3) << r.seconds << " s";
    if (r.time_limit > 0) out << " (limit " << std::setprecision(0) << r.time_limit << " s)";
    out << std::setprecision(6) << std::defaultfloat << "  " << (r.pass() ? "PASS" : "FAIL") << "\n";
  }
  return out.str();
}

}  // namespace hochkit
