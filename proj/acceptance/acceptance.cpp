// Acceptance run: one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "monodep/cli.hpp"
#include "monodep/suites.hpp"

using namespace monodep;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

Outcome all_pass(const std::vector<CaseRecord>& cases) {
  std::size_t passed = 0;
  std::string first_failure;
  for (const auto& c : cases) {
    if (c.pass) {
      ++passed;
    } else if (first_failure.empty()) {
      first_failure = c.part + ": " + c.reason;
    }
  }
  Outcome o{passed == cases.size() && !cases.empty(), std::to_string(passed) + "/" + std::to_string(cases.size()) + " cases"};
  if (!first_failure.empty()) o.detail += "; first failure " + first_failure;
  return o;
}

std::vector<CaseRecord> join(std::vector<CaseRecord> a, const std::vector<CaseRecord>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::string candidates_of(const std::vector<CaseRecord>& cases) {
  std::string out;
  for (const auto& c : cases)
    if (c.details.is_object() && c.details.contains("candidates"))
      out += ", " + c.part + " searched " + c.details.at("candidates").dump() + " candidates";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"monodep acceptance criteria"};
  std::uint64_t seed = 1;
  app.add_option("--seed", seed, "suite seed");
  CLI11_PARSE(app, argc, argv);

  struct Criterion {
    int id;
    std::string title;
    double limit_seconds;
    std::function<Outcome()> run;
  };

  const std::vector<Criterion> criteria = {
      {1, "lPrelim identity, 500 pairs (P, M)", 30, [&] { return all_pass(part_lprelim_identity(seed, 500)); }},
      {2, "pR(a) lex witnesses, 200 pairs x 2 orders", 60, [&] { return all_pass(part_pR_a(seed, 200)); }},
      {3, "pR(b) search (v, uv) deg 2 + 50 phi checks", 300,
       [&] {
         const auto cases = join(part_pR_b_search(), part_pR_b_phi(seed, 50));
         Outcome o = all_pass(cases);
         o.detail += candidates_of(cases);
         return o;
       }},
      {4, "pW(a) divisibility totality and additivity, 200 pairs", 30, [&] { return all_pass(part_pW_a(seed, 200)); }},
      {5, "pW(b) preorder witnesses, 4 matrices x 200 pairs", 120, [&] { return all_pass(part_pW_b(seed, 200)); }},
      {6, "pV(a) lex witnesses + tDim transport, 200 pairs", 60,
       [&] { return all_pass(join(part_pV_a(seed, 200), part_tDim(seed, 200))); }},
      {7, "pV(b) search (v, v^s2) deg 3", 300,
       [&] {
         const auto cases = part_pV_b_search();
         Outcome o = all_pass(cases);
         o.detail += candidates_of(cases);
         return o;
       }},
      {8, "tVdim(a) pipeline, 4 matrices x 50 pairs", 120, [&] { return all_pass(part_tVdimA(seed, 50)); }},
      {9, "tVdim(b) overring pipeline, 50 pairs", 120, [&] { return all_pass(part_tVdimB(seed, 50)); }},
      {10, "cAnalytic homogenization (V, 100) + R search", 180,
       [&] {
         const auto cases = join(part_cAnalytic_V(seed, 100), part_cAnalytic_R());
         Outcome o = all_pass(cases);
         o.detail += candidates_of(cases);
         return o;
       }},
      {11, "determinism: every suite twice, byte-identical JSON", 10,
       [&] {
         std::size_t same = 0;
         std::string differs;
         for (const auto& name : suite_names()) {
           std::string runs[2];
           for (auto& text : runs) {
             std::ostringstream out, err;
             run_cli({"suite", "--name", name, "--seed", std::to_string(seed), "--scale", "4", "--json"}, out, err);
             text = out.str();
           }
           if (runs[0] == runs[1] && !runs[0].empty()) {
             ++same;
           } else if (differs.empty()) {
             differs = name;
           }
         }
         Outcome o{same == suite_names().size(), std::to_string(same) + "/" + std::to_string(suite_names().size()) + " suites identical"};
         if (!differs.empty()) o.detail += "; " + differs + " differs";
         return o;
       }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < c.limit_seconds;
    const bool ok = o.ok && in_time;
    failed += ok ? 0 : 1;
    std::ostringstream line;
    line << (ok ? "PASS" : "FAIL") << " [" << std::setw(2) << c.id << "] " << c.title << ": " << o.detail << "; "
         << std::fixed << std::setprecision(2) << secs << " s (limit " << std::setprecision(0) << c.limit_seconds << " s"
         << (in_time ? "" : ", exceeded") << ")";
    std::cout << line.str() << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
