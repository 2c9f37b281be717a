#include "report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "run_config.hpp"

namespace pasai::cli {

namespace {

using nlohmann::json;

std::string fmt_gap(double g) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6e", g);
  return buf;
}

std::string fmt_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

json to_json(const CheckResult& r, bool with_runtime) {
  json j{{"suite", r.suite}, {"check", r.name},          {"anchor", r.anchor},
         {"status", to_string(r.status)}, {"gap", r.gap}, {"detail", r.detail}};
  if (with_runtime) j["runtime_ms"] = r.runtime_ms;
  return j;
}

CheckResult from_json(const json& j) {
  CheckResult r;
  r.suite = j.at("suite").get<std::string>();
  r.name = j.at("check").get<std::string>();
  r.anchor = j.at("anchor").get<std::string>();
  r.status = status_from_string(j.at("status").get<std::string>());
  r.gap = j.at("gap").get<double>();
  r.runtime_ms = j.value("runtime_ms", 0.0);
  r.detail = j.value("detail", std::string());
  return r;
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

// RFC 4180 record; false at end of input.
bool read_csv_record(std::istream& in, std::vector<std::string>& fields) {
  fields.clear();
  if (in.peek() == EOF) return false;
  std::string cur;
  bool quoted = false;
  for (int c; (c = in.get()) != EOF;) {
    if (quoted) {
      if (c == '"') {
        if (in.peek() == '"') {
          cur += '"';
          in.get();
        } else {
          quoted = false;
        }
      } else {
        cur += static_cast<char>(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else if (c == '\n') {
      break;
    } else if (c != '\r') {
      cur += static_cast<char>(c);
    }
  }
  if (quoted) throw std::invalid_argument("csv: unterminated quoted field");
  fields.push_back(std::move(cur));
  return true;
}

}  // namespace

std::vector<CheckResult> load_cache(const std::string& path) {
  std::vector<CheckResult> out;
  if (!std::filesystem::exists(path)) return out;
  std::ifstream in(path);
  json j;
  try {
    in >> j;
    for (const auto& rec : j.at("results")) out.push_back(from_json(rec));
  } catch (const std::exception& e) {
    throw UsageError("corrupt cache " + path + ": " + e.what());
  }
  return out;
}

void merge_into_cache(const std::string& path, const std::vector<CheckResult>& results) {
  auto cached = load_cache(path);
  std::map<std::pair<std::string, std::string>, std::size_t> where;
  for (std::size_t i = 0; i < cached.size(); ++i) where[{cached[i].suite, cached[i].name}] = i;
  for (const auto& r : results) {
    auto it = where.find({r.suite, r.name});
    if (it != where.end()) {
      cached[it->second] = r;
    } else {
      where[{r.suite, r.name}] = cached.size();
      cached.push_back(r);
    }
  }
  json j{{"results", json::array()}};
  for (const auto& r : cached) j["results"].push_back(to_json(r, true));
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write cache " + path);
  out << j.dump(2) << '\n';
}

void write_csv(std::ostream& out, const std::vector<CheckResult>& results, bool with_runtime) {
  out << "suite,check,anchor,status,gap" << (with_runtime ? ",runtime_ms" : "") << ",detail\n";
  for (const auto& r : results) {
    out << csv_field(r.suite) << ',' << csv_field(r.name) << ',' << csv_field(r.anchor) << ','
        << to_string(r.status) << ',' << fmt_gap(r.gap);
    if (with_runtime) out << ',' << fmt_ms(r.runtime_ms);
    out << ',' << csv_field(r.detail) << '\n';
  }
}

std::vector<CheckResult> parse_csv(std::istream& in) {
  std::vector<std::string> f;
  if (!read_csv_record(in, f)) throw std::invalid_argument("csv: empty input");
  const bool with_runtime = f.size() == 7;
  if (f.size() != 6 && !with_runtime) throw std::invalid_argument("csv: unexpected header");
  std::vector<CheckResult> out;
  while (read_csv_record(in, f)) {
    if (f.size() == 1 && f[0].empty()) continue;
    if (f.size() != (with_runtime ? 7u : 6u)) throw std::invalid_argument("csv: wrong field count");
    CheckResult r;
    r.suite = f[0];
    r.name = f[1];
    r.anchor = f[2];
    r.status = status_from_string(f[3]);
    r.gap = std::stod(f[4]);
    std::size_t d = 5;
    if (with_runtime) r.runtime_ms = std::stod(f[d++]);
    r.detail = f[d];
    out.push_back(std::move(r));
  }
  return out;
}

void write_json(std::ostream& out, const std::vector<CheckResult>& results, bool with_runtime) {
  json j{{"checks", json::array()}};
  long counts[3] = {0, 0, 0};
  for (const auto& r : results) {
    j["checks"].push_back(to_json(r, with_runtime));
    ++counts[static_cast<int>(r.status)];
  }
  j["summary"] = {{"pass", counts[0]}, {"fail", counts[1]}, {"deviation", counts[2]}};
  out << j.dump(2) << '\n';
}

void print_results(std::ostream& out, const std::vector<CheckResult>& results) {
  for (const auto& r : results) {
    out << std::left << std::setw(10) << to_string(r.status) << r.suite << '/' << r.name << "  gap=" << fmt_gap(r.gap);
    if (!r.detail.empty()) out << "  " << r.detail;
    out << '\n';
  }
}

}  // namespace pasai::cli
