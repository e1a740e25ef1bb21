#pragma once

// JSON Lines interchange.  BPG lines are [free, fixed, "hash", [[a,b,c],...]]
// and partial group lines are ["hash", [matrix, ...]] with row-major
// matrices.  Both kinds may share one stream; they differ in the type of the
// first array element.

#include <openssl/evp.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <variant>
#include <vector>

#include <json.hpp>

#include "pgenum/bpgkit.hpp"
#include "pgenum/error.hpp"
#include "pgenum/extender.hpp"
#include "pgenum/invariants.hpp"
#include "pgenum/symcore.hpp"

namespace pgenum {

struct BpgRecord {
  int free = 0;
  int fixed = 0;
  std::string bpg_hash;
  std::vector<Triple> mults;

  friend bool operator==(const BpgRecord&, const BpgRecord&) = default;
};

struct PgRecord {
  std::string bpg_hash;
  std::vector<std::vector<std::vector<Element>>> generators;  // row-major

  friend bool operator==(const PgRecord&, const PgRecord&) = default;
};

using Record = std::variant<BpgRecord, PgRecord>;

namespace detail {

inline std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 digest failed");
  }
  std::string out;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    out += buf;
  }
  return out;
}

}  // namespace detail

// "f{free}_x{fixed}_" followed by the first 12 hex digits of the SHA-256 of
// "free|fixed|a,b,c;a,b,c;..." over the sorted generating multiplications.
inline std::string bpg_hash(const Bpg& p) {
  const auto& s = p.set();
  std::ostringstream pre;
  pre << s.free() << '|' << s.fixed() << '|';
  bool first = true;
  for (const auto& t : p.generating_mults()) {
    if (!first) pre << ';';
    first = false;
    pre << t.a << ',' << t.b << ',' << t.c;
  }
  std::ostringstream out;
  out << 'f' << s.free() << "_x" << s.fixed() << '_' << detail::sha256_hex(pre.str()).substr(0, 12);
  return out.str();
}

// Involutive set named by a hash prefix "f{free}_x{fixed}_".
inline std::optional<InvolutiveSet> set_from_hash(const std::string& hash) {
  static const std::regex re(R"(^f(\d+)_x(\d+)_)");
  std::smatch m;
  if (!std::regex_search(hash, m, re)) return std::nullopt;
  const int f = std::stoi(m[1].str());
  const int b = std::stoi(m[2].str());
  if (2 * f + b + 1 > kMaxOrder) return std::nullopt;
  return InvolutiveSet(f, b);
}

inline BpgRecord to_record(const Bpg& p) {
  return BpgRecord{p.set().free(), p.set().fixed(), bpg_hash(p), p.generating_mults()};
}

inline PgRecord to_record(const PartialGroup& x) {
  PgRecord r{bpg_hash(x.bpg()), {}};
  for (const auto& m : minimal_generators(x)) r.generators.push_back(m.rows());
  return r;
}

inline Bpg to_bpg(const BpgRecord& r) {
  if (r.free < 0 || r.fixed < 0 || 2 * r.free + r.fixed + 1 > kMaxOrder) {
    throw IntegrityError("unsupported involutive set size");
  }
  return Bpg::from_generators(InvolutiveSet(r.free, r.fixed), r.mults);
}

// Rebuilds the partial group of a record over `set`.  An empty generator
// list is accepted only for the trivial group.
inline PartialGroup to_partial_group(const PgRecord& r, InvolutiveSet set) {
  if (r.generators.empty() && set.order() > 1) {
    throw IntegrityError("a nontrivial partial group needs generators");
  }
  std::vector<SimplexMatrix> gens;
  for (const auto& rows : r.generators) {
    try {
      gens.push_back(SimplexMatrix::from_rows(set, rows));
    } catch (const Error& e) {
      throw IntegrityError(std::string("bad generator: ") + e.what());
    }
  }
  return generate(set, gens);
}

inline PartialGroup to_partial_group(const PgRecord& r) {
  auto set = set_from_hash(r.bpg_hash);
  if (!set) throw IntegrityError("cannot read the involutive set from the hash");
  return to_partial_group(r, *set);
}

inline std::string format_line(const BpgRecord& r) {
  nlohmann::json mults = nlohmann::json::array();
  for (const auto& t : r.mults) mults.push_back({t.a, t.b, t.c});
  return nlohmann::json::array({r.free, r.fixed, r.bpg_hash, mults}).dump();
}

inline std::string format_line(const PgRecord& r) {
  return nlohmann::json::array({r.bpg_hash, r.generators}).dump();
}

inline Record parse_line(std::string_view line, std::size_t line_no) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(line_no, std::string("invalid JSON: ") + e.what());
  }
  try {
    if (!j.is_array() || j.empty()) throw ParseError(line_no, "record is not a nonempty array");
    if (j[0].is_number_integer()) {
      if (j.size() != 4 || !j[1].is_number_integer() || !j[2].is_string() || !j[3].is_array()) {
        throw ParseError(line_no, "BPG record must be [free, fixed, hash, mults]");
      }
      BpgRecord r{j[0].get<int>(), j[1].get<int>(), j[2].get<std::string>(), {}};
      for (const auto& t : j[3]) {
        if (!t.is_array() || t.size() != 3) throw ParseError(line_no, "mult must be [a,b,c]");
        r.mults.push_back(Triple{t[0].get<int>(), t[1].get<int>(), t[2].get<int>()});
      }
      return r;
    }
    if (j[0].is_string()) {
      if (j.size() != 2 || !j[1].is_array()) {
        throw ParseError(line_no, "partial group record must be [hash, generators]");
      }
      PgRecord r{j[0].get<std::string>(), {}};
      for (const auto& m : j[1]) {
        r.generators.push_back(m.get<std::vector<std::vector<Element>>>());
      }
      return r;
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(line_no, std::string("unexpected value: ") + e.what());
  }
  throw ParseError(line_no, "first field must be an integer or a string");
}

// Calls f(record, line_no) for each nonblank line.
template <typename F>
void read_records(std::istream& in, F&& f) {
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    f(parse_line(line, no), no);
  }
}

inline void write_bpg(std::ostream& os, const Bpg& p) { os << format_line(to_record(p)) << '\n'; }

inline void write_pg(std::ostream& os, const PartialGroup& x) {
  os << format_line(to_record(x)) << '\n';
}

inline std::vector<Bpg> read_bpgs(std::istream& in) {
  std::vector<Bpg> out;
  read_records(in, [&](const Record& r, std::size_t) {
    if (const auto* b = std::get_if<BpgRecord>(&r)) out.push_back(to_bpg(*b));
  });
  return out;
}

// Partial groups of a stream.  When BPG lines are present, each partial
// group's underlying BPG must equal the record its hash names.
inline std::vector<PartialGroup> read_pgs(std::istream& in) {
  std::unordered_map<std::string, Bpg> bpgs;
  std::vector<PartialGroup> out;
  read_records(in, [&](const Record& r, std::size_t no) {
    if (const auto* b = std::get_if<BpgRecord>(&r)) {
      bpgs.emplace(b->bpg_hash, to_bpg(*b));
      return;
    }
    const auto& pr = std::get<PgRecord>(r);
    auto it = bpgs.find(pr.bpg_hash);
    auto x = it != bpgs.end() ? to_partial_group(pr, it->second.set()) : to_partial_group(pr);
    if (it != bpgs.end() && !(x.bpg() == it->second)) {
      throw IntegrityError("line " + std::to_string(no) + ": BPG differs from record " + pr.bpg_hash);
    }
    out.push_back(std::move(x));
  });
  return out;
}

// ---------------------------------------------------------------------------
// Verification.

struct Discrepancy {
  std::string file;
  std::size_t line = 0;  // 0 for corpus-level findings
  std::string message;
};

struct VerifyReport {
  std::size_t bpg_records = 0;
  std::size_t pg_records = 0;
  // (order, free) -> count, and (order, free, dim) -> count.
  std::map<std::pair<int, int>, std::uint64_t> bpgs;
  std::map<std::pair<int, int>, std::uint64_t> indecomposable_bpgs;
  std::map<std::tuple<int, int, int>, std::uint64_t> pgs;
  std::map<std::tuple<int, int, int>, std::uint64_t> indecomposable_pgs;
  std::vector<Discrepancy> problems;

  bool ok() const noexcept { return problems.empty(); }
};

namespace detail {

inline std::vector<std::filesystem::path> jsonl_files(const std::filesystem::path& p) {
  namespace fs = std::filesystem;
  std::vector<fs::path> out;
  if (fs::is_directory(p)) {
    for (const auto& e : fs::directory_iterator(p)) {
      if (e.is_regular_file() && e.path().extension() == ".jsonl") out.push_back(e.path());
    }
    std::sort(out.begin(), out.end());
    // BPG files first so partial groups can be cross-checked.
    std::stable_partition(out.begin(), out.end(), [](const fs::path& f) {
      return f.filename().string().rfind("bpg", 0) == 0;
    });
  } else {
    out.push_back(p);
  }
  return out;
}

}  // namespace detail

// Validates every record of a file or of the .jsonl files of a directory.
// Record failures are collected; only I/O failures throw.
inline VerifyReport verify_dataset(const std::filesystem::path& path) {
  VerifyReport rep;
  std::unordered_map<std::string, Bpg> known;
  for (const auto& file : detail::jsonl_files(path)) {
    std::ifstream in(file);
    if (!in) throw Error("cannot open " + file.string());
    const std::string name = file.string();
    std::string line;
    std::size_t no = 0;
    while (std::getline(in, line)) {
      ++no;
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      try {
        auto rec = parse_line(line, no);
        if (const auto* b = std::get_if<BpgRecord>(&rec)) {
          ++rep.bpg_records;
          auto p = to_bpg(*b);
          const auto key = std::make_pair(p.set().order(), p.set().free());
          ++rep.bpgs[key];
          if (is_indecomposable(p)) ++rep.indecomposable_bpgs[key];
          auto [it, fresh] = known.emplace(b->bpg_hash, p);
          if (!fresh && !(it->second == p)) {
            rep.problems.push_back({name, no, "hash " + b->bpg_hash + " names two different BPGs"});
          }
          continue;
        }
        const auto& pr = std::get<PgRecord>(rec);
        ++rep.pg_records;
        auto it = known.find(pr.bpg_hash);
        auto x = it != known.end() ? to_partial_group(pr, it->second.set()) : to_partial_group(pr);
        if (!known.empty() && it == known.end()) {
          rep.problems.push_back({name, no, "no BPG record for hash " + pr.bpg_hash});
        } else if (it != known.end() && !(x.bpg() == it->second)) {
          rep.problems.push_back({name, no, "underlying BPG differs from record " + pr.bpg_hash});
        }
        const auto key = std::make_tuple(x.order(), x.set().free(), dimension(x));
        ++rep.pgs[key];
        if (is_indecomposable(x)) ++rep.indecomposable_pgs[key];
      } catch (const Error& e) {
        rep.problems.push_back({name, no, e.what()});
      }
    }
  }
  return rep;
}

}  // namespace pgenum
