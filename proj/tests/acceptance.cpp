// Acceptance gate: one line per criterion, nonzero exit if any fails.
// argv[1] must be the path to the command-line binary (used by criterion 10).
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "blockcheck/verify.hpp"

using blockcheck::verify::CheckRecord;
using blockcheck::verify::run_checks_matching;

namespace {

struct SliceResult {
  std::size_t count = 0;
  std::vector<std::string> failures;
};

SliceResult run_slice(const std::function<bool(const std::string&)>& pred) {
  SliceResult s;
  for (const auto& r : run_checks_matching(pred)) {
    ++s.count;
    if (!r.pass) s.failures.push_back(r.id);
  }
  return s;
}

bool has_prefix(const std::string& s, const std::string& pre) {
  return s.rfind(pre, 0) == 0;
}

bool check_slice(const std::vector<std::string>& prefixes, std::size_t expect,
                 std::string& detail) {
  const auto s = run_slice([&](const std::string& id) {
    for (const auto& p : prefixes)
      if (has_prefix(id, p)) return true;
    return false;
  });
  std::ostringstream os;
  os << s.count << " checks";
  if (s.count != expect) {
    os << ", expected " << expect;
    detail = os.str();
    return false;
  }
  if (!s.failures.empty()) {
    os << "; failed:";
    for (const auto& id : s.failures) os << ' ' << id;
    detail = os.str();
    return false;
  }
  detail = os.str();
  return true;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct Criterion {
  int number;
  std::string title;
  double limit_seconds;
  std::function<bool(std::string&)> body;
};

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";

  const std::vector<Criterion> criteria = {
      {1,
       "central orthogonal subsets match the closed-form classification for "
       "every supported type",
       10.0,
       [](std::string& d) { return check_slice({"centralj.family."}, 47, d); }},

      {2,
       "distinguished lattice quotients are torsion-free and full quotients "
       "have the fundamental-group order",
       1.0,
       [](std::string& d) {
         std::string d1, d2;
         const bool a = check_slice({"latquot.quotient.b"}, 11, d1);
         const bool b = check_slice(
             {"latquot.quotient.c4_odds", "latquot.quotient.c6_odds",
              "latquot.quotient.c8_odds", "latquot.quotient.c10_odds",
              "latquot.quotient.c12_odds"},
             5, d2);
         std::string d3;
         const bool c = check_slice({"latquot.fullcartan."}, 47, d3);
         d = d1 + " + " + d2 + " + " + d3;
         return a && b && c;
       }},

      {3,
       "odd symplectic rank: the long simple root is isolated under the "
       "reflection action",
       1.0,
       [](std::string& d) { return check_slice({"weylorb.cnodd."}, 5, d); }},

      {4,
       "special linear groups over small fields: orders, sylow shapes, and "
       "central quotients",
       60.0,
       [](std::string& d) { return check_slice({"matgrp.sl2."}, 48, d); }},

      {5,
       "degree-4 general linear group over the 2-element field and its "
       "order-15 centralizers",
       60.0,
       [](std::string& d) { return check_slice({"matgrp.gl42."}, 4, d); }},

      {6,
       "automorphism orders of abelian 2-groups agree across all computation "
       "paths up to order 2^10",
       120.0,
       [](std::string& d) { return check_slice({"abelian2."}, 26, d); }},

      {7,
       "rank-2 and order-16 block invariants, orbit counts, torus orders, and "
       "2-part values",
       1.0,
       [](std::string& d) {
         return check_slice({"blockinv.rank2.", "blockinv.elab16",
                             "blockinv.clifford.", "blockinv.torus.",
                             "blockinv.dnp0"},
                            25, d);
       }},

      {8,
       "diagonal 2-torus ranks over every odd composition of n up to 12",
       1.0,
       [](std::string& d) { return check_slice({"matgrp.torus.rank."}, 12, d); }},

      {9,
       "case routing honours the sylow condition and its quaternion "
       "predictions match direct enumeration",
       60.0,
       [](std::string& d) {
         return check_slice({"blockinv.case.", "blockinv.sylowcond"}, 27, d);
       }},

      {10,
       "full verification reports are byte-identical across repeated runs and "
       "exit cleanly",
       120.0,
       [&cli](std::string& d) {
         if (cli.empty()) {
           d = "no CLI path supplied";
           return false;
         }
         namespace fs = std::filesystem;
         const fs::path dir =
             fs::temp_directory_path() /
             ("acceptance_" + std::to_string(::getpid()));
         fs::create_directories(dir);
         std::vector<std::string> outputs;
         for (int i = 0; i < 3; ++i) {
           const fs::path out = dir / ("run" + std::to_string(i) + ".json");
           const std::string cmd =
               "\"" + cli + "\" verify-all --format json > \"" + out.string() +
               "\" 2>/dev/null";
           const int rc = std::system(cmd.c_str());
           if (rc != 0) {
             d = "run " + std::to_string(i) + " exited with status " +
                 std::to_string(rc);
             return false;
           }
           outputs.push_back(read_file(out));
         }
         fs::remove_all(dir);
         if (outputs[0].empty()) {
           d = "empty report";
           return false;
         }
         if (outputs[0] != outputs[1] || outputs[1] != outputs[2]) {
           d = "reports differ between runs";
           return false;
         }
         d = "3 identical reports, " + std::to_string(outputs[0].size()) +
             " bytes each";
         return true;
       }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = c.body(detail);
    } catch (const std::exception& ex) {
      detail = std::string("exception: ") + ex.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (secs > c.limit_seconds) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + std::string("over time limit");
    }
    char timing[64];
    std::snprintf(timing, sizeof(timing), "%.2fs of %.0fs", secs,
                  c.limit_seconds);
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << c.number << ": "
              << c.title << " [" << detail << "; " << timing << "]\n";
    if (!ok) ++failed;
  }
  if (failed) {
    std::cout << failed << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all 10 criteria satisfied\n";
  return 0;
}
