#include <doctest.h>

#include <algorithm>

#include "blockcheck/verify.hpp"

using namespace blockcheck::verify;

TEST_CASE("module registry lists every check module") {
  const auto names = module_names();
  const std::vector<std::string> want = {"rootsys",  "centralj", "latquot",
                                         "weylorb",  "matgrp",   "abelian2",
                                         "blockinv"};
  CHECK(names == want);
}

TEST_CASE("single-module run yields only that module and passes") {
  const auto recs = run_checks("weylorb");
  REQUIRE(!recs.empty());
  for (const auto& r : recs) {
    CHECK(r.module_name == "weylorb");
    CAPTURE(r.id);
    CHECK(r.pass);
  }
}

TEST_CASE("unknown module name selects nothing") {
  CHECK(run_checks("nosuchmodule").empty());
}

TEST_CASE("records carry ids, claims, and comparable payloads") {
  const auto recs = run_checks("centralj");
  REQUIRE(!recs.empty());
  for (const auto& r : recs) {
    CHECK(!r.id.empty());
    CHECK(!r.claim.empty());
    CHECK(r.id.rfind("centralj.", 0) == 0);
    if (r.pass) CHECK(r.expected == r.computed);
  }
}

TEST_CASE("id predicate selects exactly the matching checks") {
  const auto all = run_checks("latquot");
  const auto some = run_checks_matching([](const std::string& id) {
    return id.rfind("latquot.fullcartan.", 0) == 0;
  });
  REQUIRE(!some.empty());
  CHECK(some.size() < all.size());
  for (const auto& r : some) {
    CHECK(r.id.rfind("latquot.fullcartan.", 0) == 0);
    CHECK(r.pass);
  }
}

TEST_CASE("check ids are unique across the whole registry") {
  auto recs = run_checks("");
  std::vector<std::string> ids;
  for (const auto& r : recs) ids.push_back(r.id);
  std::sort(ids.begin(), ids.end());
  CHECK(std::adjacent_find(ids.begin(), ids.end()) == ids.end());
  CHECK(std::all_of(recs.begin(), recs.end(),
                    [](const CheckRecord& r) { return r.pass; }));
}
