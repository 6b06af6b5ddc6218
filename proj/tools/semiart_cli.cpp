/*
   Copyright 2026 The semiart Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Batch front end: analyze, verify and simp subcommands over poset JSON files.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "semiart/ring.hpp"
#include "semiart/verify.hpp"

namespace {

using nlohmann::json;
using semiart::PolarizedPoset;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitBound = 3;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// nlohmann reports the 1-based byte offset of the character it stopped on.
std::string line_context(const std::string& text, std::size_t byte) {
  std::size_t pos = std::min(byte > 0 ? byte - 1 : 0, text.size());
  std::size_t line = 1 + std::count(text.begin(), text.begin() + static_cast<long>(pos), '\n');
  std::size_t start = pos == 0 ? 0 : text.rfind('\n', pos - 1);
  start = start == std::string::npos || pos == 0 ? 0 : start + 1;
  std::size_t end = text.find('\n', start);
  std::string src = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
  std::ostringstream out;
  out << "line " << line << ", column " << pos - start + 1 << ":\n  " << src << "\n  "
      << std::string(pos - start, ' ') << "^";
  return out.str();
}

PolarizedPoset load_poset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": invalid JSON at " + line_context(text, e.byte) + "\n" + e.what());
  }
  try {
    return PolarizedPoset::from_json(j);
  } catch (const semiart::PosetError& e) {
    throw InputError(path + ": " + e.what());
  }
}

void emit(const std::string& out_dir, const std::string& file, const std::string& content) {
  if (out_dir.empty()) {
    std::cout << content << "\n";
    return;
  }
  std::filesystem::create_directories(out_dir);
  std::ofstream f(std::filesystem::path(out_dir) / file);
  if (!f) throw InputError("cannot write to '" + out_dir + "'");
  f << content << "\n";
}

struct Options {
  std::string input;
  std::string out;
  std::uint32_t base = 3;
  std::uint32_t prime = 5;
  std::uint32_t budget = 2;
  std::uint64_t seed = 1;
  int samples = 200;
  int max_upper_sets = 12;
  std::vector<std::string> only;
  bool serial = false;
};

int cmd_analyze(const Options& o) {
  auto p = load_poset(o.input);
  json rep = semiart::analyze_poset(p, o.max_upper_sets);
  std::string dot = rep["hasse_dot"];
  if (o.out.empty()) {
    std::cout << rep.dump(2) << "\n";
  } else {
    emit(o.out, "analysis.json", rep.dump(2));
    emit(o.out, "hasse.dot", dot);
  }
  return kExitOk;
}

int cmd_verify(const Options& o) {
  auto p = load_poset(o.input);
  semiart::VerifyConfig cfg;
  cfg.base = o.base;
  cfg.prime = o.prime;
  cfg.budget = o.budget;
  cfg.seed = o.seed;
  cfg.samples = o.samples;
  cfg.max_upper_sets = o.max_upper_sets;
  cfg.only.insert(o.only.begin(), o.only.end());
  cfg.parallel = !o.serial;
  semiart::VerifyReport rep;
  try {
    rep = semiart::verify_poset(p, cfg);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  json checks = rep.to_json();
  std::string instance = std::filesystem::path(o.input).stem().string();
  for (auto& c : checks) c["instance"] = instance;
  json doc{{"instance", instance},
           {"config",
            {{"base", o.base}, {"prime", o.prime}, {"budget", o.budget}, {"seed", o.seed}, {"samples", o.samples}}},
           {"passed", rep.all_passed()},
           {"checks", checks}};
  emit(o.out, "report.json", doc.dump(2));
  for (const auto& c : rep.checks)
    if (c.status != semiart::CheckStatus::pass)
      std::cerr << semiart::status_name(c.status) << ": " << c.check << " " << c.witness.dump() << "\n";
  return rep.exit_code();
}

int cmd_simp(const Options& o) {
  auto p = load_poset(o.input);
  semiart::RingContext ctx(p, o.prime);
  if (semiart::generator_count(ctx, o.budget) > 6000) {
    std::cerr << "resource bound: generator family too large for the simp reconstruction\n";
    return kExitBound;
  }
  auto simp = semiart::simp_poset(ctx, semiart::generator_family(ctx, o.budget));
  if (!semiart::order_isomorphic(p, simp)) {
    std::cerr << "reconstructed simple-module poset is not isomorphic to the input\n";
    emit(o.out, "simp.dot", simp.hasse_dot("simp"));
    return kExitFailed;
  }
  emit(o.out, "simp.dot", simp.hasse_dot("simp"));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"semiart: polarized posets, block matrices and the rings they generate"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "poset JSON file")->required();
    sub->add_option("--out", o.out, "write outputs into this directory instead of stdout");
    sub->add_option("--max-upper-sets", o.max_upper_sets, "largest poset for subset enumeration")
        ->check(CLI::PositiveNumber);
  };

  auto* analyze = app.add_subcommand("analyze", "layers, chains, components and the Hasse diagram");
  add_common(analyze);

  auto* verify = app.add_subcommand("verify", "run every structural check and print a JSON report");
  add_common(verify);
  verify->add_option("--base", o.base, "dense evaluation base")->check(CLI::Range(2u, 64u));
  verify->add_option("--prime", o.prime, "characteristic of the coefficient field");
  verify->add_option("--budget", o.budget, "digit budget for generator block indices")->check(CLI::Range(1u, 8u));
  verify->add_option("--seed", o.seed, "random seed");
  verify->add_option("--samples", o.samples, "random samples per sampled check")->check(CLI::PositiveNumber);
  verify->add_option("--only", o.only, "run only these checks")->check(CLI::IsMember(semiart::check_names()));
  verify->add_flag("--serial", o.serial, "run checks one at a time");

  auto* simp = app.add_subcommand("simp", "reconstruct the simple-module poset as DOT");
  add_common(simp);
  simp->add_option("--prime", o.prime, "characteristic of the coefficient field");
  simp->add_option("--budget", o.budget, "digit budget for generator block indices")->check(CLI::Range(1u, 8u));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*analyze) return cmd_analyze(o);
    if (*verify) return cmd_verify(o);
    return cmd_simp(o);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const semiart::ResourceBound& e) {
    std::cerr << "resource bound: " << e.what() << "\n";
    return kExitBound;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  }
}
