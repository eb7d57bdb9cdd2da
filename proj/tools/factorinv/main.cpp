#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <unistd.h>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "factorinv/affine_monoid.hpp"
#include "factorinv/block_monoid.hpp"
#include "factorinv/corpus.hpp"
#include "factorinv/invariants.hpp"
#include "factorinv/presentations.hpp"
#include "factorinv/report.hpp"
#include "factorinv/unions.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace factorinv;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitResource = 3;
constexpr int kExitIo = 4;

class IoError : public Error {
 public:
  using Error::Error;
};

struct GlobalOptions {
  bool json_output = true;
  std::optional<Int> bound;
  std::optional<Int> kmax;
  unsigned jobs = 1;
  bool cache = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool looks_like_group(const std::string& input) {
  return !input.empty() && (input[0] == 'C' || input[0] == 'c');
}

/// Numerical literal "4,10,21", group literal "C2xC2", or an affine JSON path
/// when `affine` is set.
Monoid load_monoid(const std::string& input, bool affine) {
  if (affine) return Monoid(AffineMonoid::parse(read_file(input)));
  if (looks_like_group(input)) return ZeroSumMonoid(FiniteAbelianGroup::parse(input)).monoid();
  return Monoid(NumericalMonoid::parse(input));
}

/// Canonical description of the input, used as the cache key.
std::string describe_input(const std::string& input, bool affine) {
  if (affine) return "affine:" + AffineMonoid::parse(read_file(input)).to_json().dump();
  if (looks_like_group(input)) return "group:" + FiniteAbelianGroup::parse(input).to_string();
  return "numerical:" + NumericalMonoid::parse(input).to_string();
}

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Result cache under $FACTORINV_CACHE_DIR. Entries hold the full key next to
/// the payload so hash collisions are detected, and are published by rename.
class Cache {
 public:
  explicit Cache(bool enabled) {
    const char* dir = std::getenv("FACTORINV_CACHE_DIR");
    if (enabled && dir && *dir) dir_ = fs::path(dir);
  }

  std::optional<json> load(const std::string& key) const {
    if (!dir_) return std::nullopt;
    std::ifstream in(path(key));
    if (!in) return std::nullopt;
    try {
      json entry = json::parse(in);
      if (entry.at("key") != key) return std::nullopt;
      return entry.at("payload");
    } catch (const json::exception&) {
      return std::nullopt;
    }
  }

  void store(const std::string& key, const json& payload) const {
    if (!dir_) return;
    std::error_code ec;
    fs::create_directories(*dir_, ec);
    if (ec) throw IoError("cannot create cache directory '" + dir_->string() + "'");
    const fs::path target = path(key);
    fs::path tmp = target;
    tmp += ".tmp." + std::to_string(::getpid());
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) throw IoError("cannot write cache entry '" + tmp.string() + "'");
      out << json{{"key", key}, {"payload", payload}}.dump();
      if (!out) throw IoError("cannot write cache entry '" + tmp.string() + "'");
    }
    fs::rename(tmp, target, ec);
    if (ec) {
      fs::remove(tmp, ec);
      throw IoError("cannot publish cache entry '" + target.string() + "'");
    }
  }

 private:
  fs::path path(const std::string& key) const {
    char name[32];
    std::snprintf(name, sizeof name, "%016llx.json",
                  static_cast<unsigned long long>(fnv1a(key)));
    return *dir_ / name;
  }

  std::optional<fs::path> dir_;
};

void emit(const json& payload) { std::cout << payload.dump(2) << '\n'; }

/// Runs `compute` unless the cache already holds the payload for `key`.
template <class F>
void cached(const GlobalOptions& opts, const std::string& key, F&& compute) {
  Cache cache(opts.cache);
  if (auto hit = cache.load(key)) {
    emit(*hit);
    return;
  }
  json payload = compute();
  cache.store(key, payload);
  emit(payload);
}

std::string opt_key(const std::optional<Int>& v) { return v ? std::to_string(*v) : "default"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Factorization invariants of numerical, affine and zero-sum monoids"};
  app.require_subcommand(1);
  GlobalOptions opts;
  app.add_flag("--json", opts.json_output, "Emit JSON (the default and only format)");
  app.add_option("--bound", opts.bound, "Scan bound for per-element catenary scans")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--kmax", opts.kmax, "Largest k for unions of sets of lengths")
      ->check(CLI::PositiveNumber);
  app.add_option("--jobs", opts.jobs, "Worker threads for corpus searches")
      ->check(CLI::PositiveNumber);
  app.add_flag("--cache", opts.cache, "Reuse results stored under $FACTORINV_CACHE_DIR");

  std::string input;
  bool affine = false;
  auto add_monoid_command = [&](const std::string& name, const std::string& help) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("monoid", input, "Generators '4,10,21', group 'C2xC2', or affine JSON path")
        ->required();
    cmd->add_flag("--affine", affine, "Treat the argument as an affine monoid JSON file");
    cmd->fallthrough();
    return cmd;
  };

  auto* report_cmd = add_monoid_command("report", "Full invariant report");
  auto* presentation_cmd = add_monoid_command("presentation", "Minimal presentation");
  auto* omega_cmd = add_monoid_command("omega", "omega invariant per atom and global");
  auto* tame_cmd = add_monoid_command("tame", "Tame degree per atom and global");
  auto* catenary_cmd = add_monoid_command("catenary", "Catenary degree via Betti elements");

  Int f_max = 0;
  std::string csv_path;
  auto* search_cmd =
      app.add_subcommand("search-frobenius", "All numerical monoids with Frobenius number <= F");
  search_cmd->add_option("F_max", f_max, "Largest Frobenius number")->required();
  search_cmd->add_option("--out", csv_path, "Write one CSV record per monoid here");
  search_cmd->fallthrough();

  std::string unions_input;
  auto* unions_cmd = app.add_subcommand("unions", "Unions of sets of lengths V_k");
  unions_cmd->add_option("monoid", unions_input, "Generators, e.g. 4,10,21")->required();
  unions_cmd->fallthrough();

  std::string group_literal;
  auto* block_cmd = app.add_subcommand("blockmonoid", "Zero-sum monoid suite over a finite group");
  block_cmd->add_option("group", group_literal, "Group literal such as C3 or C2xC2")->required();
  block_cmd->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  }

  try {
    if (report_cmd->parsed()) {
      const std::string key = "report|" + describe_input(input, affine) + "|" + opt_key(opts.bound);
      cached(opts, key, [&] {
        ReportOptions ro;
        ro.bound = opts.bound;
        return to_json(full_report(load_monoid(input, affine), ro));
      });
    } else if (presentation_cmd->parsed()) {
      cached(opts, "presentation|" + describe_input(input, affine),
             [&] { return to_json(minimal_presentation(load_monoid(input, affine))); });
    } else if (omega_cmd->parsed()) {
      cached(opts, "omega|" + describe_input(input, affine), [&] {
        auto per_atom = omega_per_atom(load_monoid(input, affine));
        Int best = 0;
        for (Int v : per_atom) best = std::max(best, v);
        return json{{"omega_per_atom", per_atom}, {"omega", best}};
      });
    } else if (tame_cmd->parsed()) {
      cached(opts, "tame|" + describe_input(input, affine), [&] {
        auto t = tame_degree(load_monoid(input, affine));
        return json{{"tame_per_atom", t.per_atom},
                    {"tame", t.value},
                    {"witness_element", t.witness_element},
                    {"witness_atom", t.witness_atom}};
      });
    } else if (catenary_cmd->parsed()) {
      cached(opts, "catenary|" + describe_input(input, affine), [&] {
        Monoid m = load_monoid(input, affine);
        auto p = minimal_presentation(m);
        return json{{"catenary", catenary(m)}, {"betti_elements", p.betti_elements}};
      });
    } else if (search_cmd->parsed()) {
      if (f_max < 1) throw DomainError("F_max must be at least 1");
      const unsigned jobs = opts.jobs;
      std::vector<SearchRecord> records;
      json summary;
      Cache cache(opts.cache);
      const std::string key = "search-frobenius|" + std::to_string(f_max);
      if (auto hit = cache.load(key)) {
        for (const auto& r : hit->at("records")) {
          SearchRecord rec;
          rec.generators = r.at("generators").get<std::vector<Int>>();
          rec.frobenius = r.at("frobenius");
          rec.omega = r.at("omega");
          rec.catenary = r.at("catenary");
          rec.tame = r.at("tame");
          rec.generic = r.at("generic");
          rec.omega_lt_tame = r.at("omega_lt_tame");
          records.push_back(std::move(rec));
        }
      } else {
        records = search_frobenius(f_max, jobs);
        json stored = json::array();
        for (const auto& r : records) stored.push_back(to_json(r));
        cache.store(key, json{{"records", stored}});
      }
      if (!csv_path.empty()) {
        std::ofstream out(csv_path, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open '" + csv_path + "' for writing");
        write_csv(out, records);
        if (!out) throw IoError("write to '" + csv_path + "' failed");
      }
      summary = to_json(summarize(records, f_max));
      bool chain = true;
      for (const auto& r : records) {
        chain = chain && r.catenary <= r.omega && r.omega <= r.tame && r.tame <= r.omega * r.omega;
      }
      summary["chain_holds_for_all"] = chain;
      emit(summary);
    } else if (unions_cmd->parsed()) {
      const Int kmax = opts.kmax.value_or(40);
      cached(opts, "unions|" + describe_input(unions_input, false) + "|" + std::to_string(kmax), [&] {
        NumericalMonoid m = NumericalMonoid::parse(unions_input);
        json doc = to_json(ap_structure_scan(m, kmax));
        if (auto h = check_ap_hypothesis(m)) {
          doc["hypothesis"] = {{"d", h->d}, {"alpha", h->alpha}, {"beta", h->beta}};
        } else {
          doc["hypothesis"] = nullptr;
        }
        return doc;
      });
    } else if (block_cmd->parsed()) {
      const Int kmax = opts.kmax.value_or(8);
      const auto group = FiniteAbelianGroup::parse(group_literal);
      cached(opts, "blockmonoid|" + group.to_string() + "|" + std::to_string(kmax), [&] {
        json doc;
        doc["suite"] = to_json(group_suite(group));
        doc["rho_checks"] = to_json(rho_checks(ZeroSumMonoid(group), kmax));
        return doc;
      });
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const DomainError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitParse;
  } catch (const OverflowError& e) {
    std::cerr << "overflow: " << e.what() << '\n';
    return kExitResource;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kExitIo;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kExitIo;
  }
  return 0;
}
