#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "hss/cohomology.hpp"
#include "hss/spaces.hpp"
#include "hss/stability.hpp"
#include "hss/verifier.hpp"
#include "hss/version.hpp"

namespace hss {

// Output formats for every subcommand. JSON objects are emitted with sorted
// keys, CSV uses the fixed column orders documented in the README, and
// rationals always serialize as exact "p/q" strings, never as decimals.
enum class Format { Json, Csv, Md };

inline Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "md") return Format::Md;
  throw std::invalid_argument("unknown format: " + s);
}

namespace emit {

using json = nlohmann::json;

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string md_row(const std::vector<std::string>& cells) {
  std::string out = "|";
  for (const auto& c : cells) out += " " + c + " |";
  return out + "\n";
}

inline std::string md_table(const std::vector<std::string>& header,
                            const std::vector<std::vector<std::string>>& rows) {
  std::string out = md_row(header);
  out += "|";
  for (std::size_t i = 0; i < header.size(); ++i) out += " --- |";
  out += "\n";
  for (const auto& r : rows) out += md_row(r);
  return out;
}

inline std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

inline std::string oracle_answer(const CohomologyQuery& query, const CohomologyAnswer& answer,
                                 Format format) {
  switch (format) {
    case Format::Json: {
      json j;
      j["query"] = query.text();
      j["status"] = to_string(answer.status);
      j["witness_count"] = answer.witness_count;
      j["witnesses"] = answer.witnesses;
      return j.dump();
    }
    case Format::Csv:
      return "query,status,witness_count\n" + csv_escape(query.text()) + "," +
             to_string(answer.status) + "," + std::to_string(answer.witness_count) + "\n";
    case Format::Md: {
      std::string out = md_table({"query", "status", "witness_count"},
                                 {{query.text(), to_string(answer.status),
                                   std::to_string(answer.witness_count)}});
      for (const auto& w : answer.witnesses) out += "- " + w + "\n";
      return out;
    }
  }
  throw std::logic_error("bad format");
}

inline json verdict_json(const StabilityVerdict& v) {
  json j;
  j["outcome"] = to_string(v.outcome);
  j["basis"] = v.basis;
  j["caveats"] = v.caveats;
  json ranks = json::array();
  for (const auto& ev : v.per_rank) {
    json r;
    r["p"] = ev.p;
    if (ev.window)
      r["window"] = json::array({*ev.window, *ev.window});
    else
      r["window"] = json::array();
    json obs = json::array();
    for (const auto& ob : ev.obstructions) {
      json o;
      o["i"] = ob.i;
      o["twist"] = ob.twist;
      o["query"] = ob.query.text();
      o["status"] = to_string(ob.answer.status);
      o["witness_count"] = ob.answer.witness_count;
      o["witnesses"] = ob.answer.witnesses;
      o["equality_case"] = ob.equality_case;
      obs.push_back(o);
    }
    r["obstructions"] = obs;
    ranks.push_back(r);
  }
  j["ranks"] = ranks;
  return j;
}

inline std::string verdict(const std::string& space_key, const std::string& resolution_text,
                           const StabilityVerdict& v, Format format) {
  switch (format) {
    case Format::Json: {
      json j = verdict_json(v);
      j["space"] = space_key;
      if (!resolution_text.empty()) j["resolution"] = resolution_text;
      return j.dump();
    }
    case Format::Csv:
      return "space,resolution,outcome,basis,caveats\n" + space_key + "," + resolution_text +
             "," + to_string(v.outcome) + "," + v.basis + "," + csv_escape(join(v.caveats, "; ")) +
             "\n";
    case Format::Md: {
      std::string out =
          md_table({"space", "resolution", "outcome", "basis"},
                    {{space_key, resolution_text, to_string(v.outcome), v.basis}});
      for (const auto& c : v.caveats) out += "- caveat: " + c + "\n";
      for (const auto& ev : v.per_rank)
        for (const auto& ob : ev.obstructions)
          out += "- obstruction at p=" + std::to_string(ev.p) + ": " + ob.query.text() +
                 " [" + ob.equality_case + "]\n";
      return out;
    }
  }
  throw std::logic_error("bad format");
}

inline std::string verification(const VerificationReport& r, Format format,
                                bool with_timings = false) {
  switch (format) {
    case Format::Json: {
      json j;
      j["proposition"] = r.proposition;
      j["range"] = r.parameter_range;
      j["instances_checked"] = r.instances_checked;
      j["violations"] = r.violations;
      j["equalities"] = r.equality_cases_found;
      j["expected_equalities"] = r.expected_equality_cases;
      j["notes"] = r.notes;
      j["success"] = r.success;
      if (with_timings) j["elapsed_ms"] = r.elapsed_ms;
      return j.dump();
    }
    case Format::Csv: {
      std::string out = "proposition,violation\n";
      for (const auto& v : r.violations) out += r.proposition + "," + csv_escape(v) + "\n";
      return out;
    }
    case Format::Md: {
      std::string out = md_table(
          {"proposition", "range", "instances", "violations", "equalities", "success"},
          {{r.proposition, r.parameter_range, std::to_string(r.instances_checked),
            std::to_string(r.violations.size()), std::to_string(r.equality_cases_found.size()),
            r.success ? "yes" : "no"}});
      for (const auto& v : r.violations) out += "- violation: " + v + "\n";
      for (const auto& e : r.equality_cases_found) out += "- equality: " + e + "\n";
      for (const auto& n : r.notes) out += "- note: " + n + "\n";
      return out;
    }
  }
  throw std::logic_error("bad format");
}

inline std::string surface_invariants(const std::vector<SurfaceInvariants>& rows,
                                      Format format) {
  switch (format) {
    case Format::Json: {
      json arr = json::array();
      for (const auto& s : rows) {
        json j;
        j["d"] = s.d;
        j["h2_structure"] = s.h2_structure;
        j["chi_top"] = s.chi_top;
        j["b2"] = s.b2;
        j["h11"] = s.h11;
        j["c2_coefficient"] = s.c2_coefficient;
        arr.push_back(j);
      }
      return rows.size() == 1 ? arr[0].dump() : arr.dump();
    }
    case Format::Csv: {
      std::string out = "d,h2_structure,chi_top,b2,h11\n";
      for (const auto& s : rows)
        out += std::to_string(s.d) + "," + std::to_string(s.h2_structure) + "," +
               std::to_string(s.chi_top) + "," + std::to_string(s.b2) + "," +
               std::to_string(s.h11) + "\n";
      return out;
    }
    case Format::Md: {
      std::vector<std::vector<std::string>> body;
      for (const auto& s : rows)
        body.push_back({std::to_string(s.d), std::to_string(s.h2_structure),
                        std::to_string(s.chi_top), std::to_string(s.b2),
                        std::to_string(s.h11)});
      return md_table({"d", "h2(O_S)", "chi_top", "b2", "h11"}, body);
    }
  }
  throw std::logic_error("bad format");
}

inline std::string langer(const std::string& space_key, const Rational& bound, Format format) {
  switch (format) {
    case Format::Json: {
      json j;
      j["space"] = space_key;
      j["bound"] = bound.str();
      return j.dump();
    }
    case Format::Csv:
      return "space,bound\n" + space_key + "," + bound.str() + "\n";
    case Format::Md:
      return md_table({"space", "bound"}, {{space_key, bound.str()}});
  }
  throw std::logic_error("bad format");
}

inline std::string catalog(Format format) {
  struct Row {
    const char* key;
    const char* series;
    const char* params;
    const char* dim;
    const char* index;
  };
  static const Row rows[] = {
      {"P:n", "Projective", "n >= 1", "n", "n+1"},
      {"B:n", "Quadric", "n >= 2", "n", "n"},
      {"A:a,b", "Grassmannian", "a,b >= 2", "a*b", "a+b"},
      {"C:n", "Lagrangian", "n >= 3", "n(n+1)/2", "n+1"},
      {"D:n", "Spinor", "n >= 5", "n(n-1)/2", "2(n-1)"},
      {"E3", "EIII", "-", "16", "12"},
      {"E7", "EVII", "-", "27", "18"},
  };
  switch (format) {
    case Format::Json: {
      json arr = json::array();
      for (const auto& r : rows) {
        json j;
        j["key"] = r.key;
        j["series"] = r.series;
        j["parameters"] = r.params;
        j["dimension"] = r.dim;
        j["index"] = r.index;
        arr.push_back(j);
      }
      return arr.dump();
    }
    case Format::Csv: {
      std::string out = "key,series,parameters,dimension,index\n";
      for (const auto& r : rows)
        out += std::string(r.key) + "," + r.series + "," + csv_escape(r.params) + "," +
               csv_escape(r.dim) + "," + csv_escape(r.index) + "\n";
      return out;
    }
    case Format::Md: {
      std::vector<std::vector<std::string>> body;
      for (const auto& r : rows) body.push_back({r.key, r.series, r.params, r.dim, r.index});
      return md_table({"key", "series", "parameters", "dimension", "index"}, body);
    }
  }
  throw std::logic_error("bad format");
}

inline std::string space_descriptor(const HssSpace& s, Format format) {
  switch (format) {
    case Format::Json: {
      json j;
      j["key"] = s.key();
      j["series"] = series_name(s.series);
      j["dimension"] = s.dimension;
      j["index"] = s.index;
      j["quadric_like"] = s.quadric_like();
      j["reducible_picard"] = s.reducible_picard();
      return j.dump();
    }
    case Format::Csv:
      return "key,series,dimension,index\n" + s.key() + "," + series_name(s.series) + "," +
             std::to_string(s.dimension) + "," + std::to_string(s.index) + "\n";
    case Format::Md:
      return md_table({"key", "series", "dimension", "index"},
                      {{s.key(), series_name(s.series), std::to_string(s.dimension),
                        std::to_string(s.index)}});
  }
  throw std::logic_error("bad format");
}

}  // namespace emit

// 64-bit FNV-1a over the canonicalized argument vector.
inline std::string argv_digest(const std::vector<std::string>& argv) {
  std::uint64_t h = 1469598103934665603ull;
  for (const auto& arg : argv) {
    for (unsigned char c : arg) {
      h ^= c;
      h *= 1099511628211ull;
    }
    h ^= 0x1f;
    h *= 1099511628211ull;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// One newline-delimited JSON record per run, appended to the log file. The
// payload is byte-identical across runs with the same version and argv; the
// timestamp is the only varying field.
inline void append_run_record(const std::string& path, const std::vector<std::string>& argv,
                              const std::string& started_at, const std::string& payload,
                              int exit_status) {
  nlohmann::json j;
  j["argv"] = argv;
  j["started_at"] = started_at;
  j["version"] = kVersion;
  j["input_digest"] = argv_digest(argv);
  j["payload"] = payload;
  j["exit_status"] = exit_status;
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot open run log: " + path);
  out << j.dump() << "\n";
}

}  // namespace hss
