#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "acceptance.hpp"
#include "cubext/error.hpp"

using namespace cubext::acceptance;

int main(int argc, char** argv) {
  bool write_goldens = false;
  std::set<int> only;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--write-goldens") == 0) write_goldens = true;
    else only.insert(std::atoi(argv[i]));
  }

  struct Entry {
    int id;
    const char* title;
    double budget_s;  // wall-clock limit stated by the criterion, 0 when none
    std::function<Outcome()> run;
  };
  const std::vector<Entry> entries = {
      {1, "canonical decompositions vs brute force", 60, criterion1},
      {2, "general cubics vs brute force", 0, criterion2},
      {3, "root transport", 0, criterion3},
      {4, "symbolic identities", 0, criterion4},
      {5, "Galois suite", 0, criterion5},
      {6, "named genus values", 0, criterion6},
      {7, "genus integrality", 300, criterion7},
      {8, "Kummer and Artin-Schreier genus oracles", 0, criterion8},
      {9, "isomorphism invariance", 0, criterion9},
      {10, "CLI goldens, schema, round trip", 0, [&] { return criterion10(write_goldens); }},
  };

  int failed = 0;
  for (const auto& e : entries) {
    if (!only.empty() && !only.count(e.id)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = e.run();
    } catch (const cubext::Error& err) {
      o = {false, std::string("uncaught ") + std::string(cubext::errc_name(err.code())) + ": " + err.what()};
    } catch (const std::exception& err) {
      o = {false, std::string("uncaught exception: ") + err.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (e.budget_s > 0 && secs > e.budget_s) {
      o.pass = false;
      o.detail += ", over the " + std::to_string(static_cast<int>(e.budget_s)) + " s budget";
    }
    std::printf("criterion %2d %s  %-40s %7.1fs  %s\n", e.id, o.pass ? "PASS" : "FAIL", e.title, secs, o.detail.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
