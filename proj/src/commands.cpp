#include "commands.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include "pgenum/pgenum.hpp"

namespace fs = std::filesystem;

namespace pgenum::cli {

namespace {

void check_config(const RunConfig& c) {
  if (c.order < 1 || c.order > 12) throw UsageError("--order must be between 1 and 12");
  if (c.max_dim && (*c.max_dim < 1 || *c.max_dim > c.order - 1)) {
    throw UsageError("--max-dim must be between 1 and order - 1");
  }
  if (c.threads < 1) throw UsageError("--threads must be at least 1");
}

// Progress on stderr, at most about 20 lines per run.
std::function<void(std::size_t, std::size_t)> progress_printer(bool quiet) {
  if (quiet) return {};
  return [last = std::size_t{0}](std::size_t done, std::size_t total) mutable {
    const std::size_t step = std::max<std::size_t>(1, total / 20);
    if (done == total || done >= last + step) {
      last = done;
      std::cerr << "roots " << done << "/" << total << "\n";
    }
  };
}

EnumerateOptions options_of(const RunConfig& c) {
  EnumerateOptions o;
  o.max_dim = c.max_dim;
  o.bpg_only = c.bpg_only;
  o.indecomposable_only = c.indecomposable;
  o.threads = c.threads;
  o.progress = progress_printer(c.quiet);
  return o;
}

// Directory output: bpgs.jsonl plus one partial group file per (free, fixed).
class DirectorySink {
 public:
  DirectorySink(const fs::path& dir, bool bpg_only) : dir_(dir), bpg_only_(bpg_only) {
    fs::create_directories(dir_);
    bpgs_.open(dir_ / "bpgs.jsonl");
    if (!bpgs_) throw std::runtime_error("cannot write " + (dir_ / "bpgs.jsonl").string());
  }

  void operator()(const PartialGroup& x) {
    if (x.top_level() <= 2) write_bpg(bpgs_, x.bpg());
    if (bpg_only_) return;
    const auto key = std::make_pair(x.set().free(), x.set().fixed());
    auto it = files_.find(key);
    if (it == files_.end()) {
      const auto name = "pgs_f" + std::to_string(key.first) + "_x" + std::to_string(key.second) + ".jsonl";
      auto f = std::make_unique<std::ofstream>(dir_ / name);
      if (!*f) throw std::runtime_error("cannot write " + (dir_ / name).string());
      it = files_.emplace(key, std::move(f)).first;
    }
    write_pg(*it->second, x);
  }

 private:
  fs::path dir_;
  bool bpg_only_;
  std::ofstream bpgs_;
  std::map<std::pair<int, int>, std::unique_ptr<std::ofstream>> files_;
};

}  // namespace

int run_enumerate(const RunConfig& c) {
  check_config(c);
  const auto opt = options_of(c);
  const bool to_dir = !c.out.empty() && (fs::is_directory(c.out) || c.out.back() == '/');
  if (to_dir) {
    DirectorySink sink(c.out, c.bpg_only);
    enumerate_order(c.order, opt, [&](const PartialGroup& x) { sink(x); });
    return kOk;
  }
  std::ofstream file;
  if (!c.out.empty()) {
    file.open(c.out);
    if (!file) throw std::runtime_error("cannot write " + c.out);
  }
  std::ostream& os = c.out.empty() ? std::cout : file;
  // Mixed stream: each BPG line precedes the partial groups over it.
  enumerate_order(c.order, opt, [&](const PartialGroup& x) {
    if (x.top_level() <= 2) write_bpg(os, x.bpg());
    if (!c.bpg_only) write_pg(os, x);
  });
  os.flush();
  return os ? kOk : kInvalid;
}

int run_count(const RunConfig& c) {
  check_config(c);
  const auto t = count_order(c.order, options_of(c));
  const int dims = std::max(1, c.order - 1);
  std::cout << "order " << c.order << (c.indecomposable ? " (indecomposable)" : "") << "\n";
  std::cout << std::setw(4) << "f";
  for (int d = 1; d <= dims; ++d) std::cout << std::setw(10) << ("dim" + std::to_string(d));
  std::cout << std::setw(10) << "total" << "\n";
  for (int f = 0; 2 * f <= c.order - 1; ++f) {
    if (c.indecomposable && t.row_total(f) == 0) continue;
    std::cout << std::setw(4) << f;
    for (int d = 1; d <= dims; ++d) {
      const auto v = t.at(f, d);
      std::cout << std::setw(10) << (v ? std::to_string(v) : "");
    }
    std::cout << std::setw(10) << t.row_total(f) << "\n";
  }
  std::cout << std::setw(4) << "all";
  for (int d = 1; d <= dims; ++d) {
    std::uint64_t n = 0;
    for (int f = 0; 2 * f <= c.order - 1; ++f) n += t.at(f, d);
    std::cout << std::setw(10) << (n ? std::to_string(n) : "");
  }
  std::cout << std::setw(10) << t.total() << "\n";
  return kOk;
}

int run_verify(const std::string& in, const std::string& expect) {
  if (!fs::exists(in)) throw std::runtime_error("no such file: " + in);
  auto rep = verify_dataset(in);
  std::cout << "BPG records: " << rep.bpg_records << "\n";
  std::cout << "partial group records: " << rep.pg_records << "\n";
  std::map<std::pair<int, int>, std::uint64_t> pg_rows;
  for (const auto& [k, v] : rep.pgs) pg_rows[{std::get<0>(k), std::get<1>(k)}] += v;
  for (const auto& [k, v] : pg_rows) {
    std::cout << "  order " << k.first << " free " << k.second << ": " << v << " partial groups\n";
  }
  for (const auto& [k, v] : rep.bpgs) {
    std::cout << "  order " << k.first << " free " << k.second << ": " << v << " BPGs\n";
  }
  auto problems = rep.problems;
  if (!expect.empty()) {
    for (auto& d : reference::compare(rep, expect)) problems.push_back(std::move(d));
  }
  for (const auto& d : problems) {
    if (d.line) {
      std::cout << d.file << ":" << d.line << ": " << d.message << "\n";
    } else {
      std::cout << d.message << "\n";
    }
  }
  std::cout << (problems.empty() ? "OK" : "FAILED") << " (" << problems.size() << " discrepancies)\n";
  return problems.empty() ? kOk : kInvalid;
}

int run_degree(const std::string& in, const std::string& out) {
  std::ifstream is(in);
  if (!is) throw std::runtime_error("cannot open " + in);
  std::ofstream file;
  if (!out.empty()) {
    file.open(out);
    if (!file) throw std::runtime_error("cannot write " + out);
  }
  std::ostream& os = out.empty() ? std::cout : file;
  std::map<std::string, InvolutiveSet> sets;
  int status = kOk;
  std::string line;
  std::size_t no = 0;
  while (std::getline(is, line)) {
    ++no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      auto rec = parse_line(line, no);
      if (const auto* b = std::get_if<BpgRecord>(&rec)) {
        sets.emplace(b->bpg_hash, InvolutiveSet(b->free, b->fixed));
        continue;
      }
      const auto& pr = std::get<PgRecord>(rec);
      auto it = sets.find(pr.bpg_hash);
      const auto x = it != sets.end() ? to_partial_group(pr, it->second) : to_partial_group(pr);
      nlohmann::json j{{"line", no},
                       {"bpg_hash", pr.bpg_hash},
                       {"order", x.order()},
                       {"dimension", dimension(x)},
                       {"degree", degree(x)},
                       {"coskeletal2", is_coskeletal2(x)},
                       {"indecomposable", is_indecomposable(x)}};
      os << j.dump() << "\n";
    } catch (const Error& e) {
      std::cerr << in << ":" << no << ": " << e.what() << "\n";
      status = kInvalid;
    }
  }
  return status;
}

namespace {


std::string subgroup_text(const std::vector<Element>& g) {
  std::ostringstream s;
  s << '{';
  for (std::size_t i = 0; i < g.size(); ++i) s << (i ? "," : "") << g[i];
  s << '}';
  return s.str();
}

}  // namespace

int run_catalog() {
  int status = kOk;
  for (const auto& e : catalog()) {
    const auto& x = e.pg;
    const auto& s = x.set();
    const auto gens = minimal_generators(x);
    const int deg = degree(x);
    const auto subs = maximal_subgroups(x);
    const bool match = dimension(x) == e.dim && static_cast<int>(gens.size()) == e.gens &&
                       deg == e.degree && subs == e.maximal_subgroups;
    if (!match) status = kInvalid;
    std::cout << "(" << s.free() << "," << s.fixed() << ") " << e.name << "  dim " << dimension(x)
              << "  gens " << gens.size() << "  deg " << deg << (match ? "" : "  MISMATCH") << "\n";
    std::cout << "  maximal subgroups:";
    for (const auto& g : subs) std::cout << " " << subgroup_text(g);
    std::cout << "\n  table (row * column):\n";
    const auto elems = s.nonidentity();
    std::cout << "    " << std::setw(4) << "";
    for (Element b : elems) std::cout << std::setw(4) << b;
    std::cout << "\n";
    for (Element a : elems) {
      std::cout << "    " << std::setw(4) << a;
      for (Element b : elems) {
        const auto c = x.bpg().multiply(a, b);
        std::cout << std::setw(4) << (c ? std::to_string(*c) : "?");
      }
      std::cout << "\n";
    }
    std::cout << "  generators:\n";
    for (const auto& m : gens) std::cout << "    " << m << "\n";
  }
  return status;
}

}  // namespace pgenum::cli
