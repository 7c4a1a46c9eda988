#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <unistd.h>

#include "algx/errors.hpp"
#include "algx/harness.hpp"
#include "algx/serialize.hpp"

using namespace algx;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& content) {
    path = "/tmp/algx_catalog_XXXXXX";
    int fd = mkstemp(path.data());
    REQUIRE(fd >= 0);
    close(fd);
    std::ofstream(path) << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("catalog load validates entries") {
  TempFile good(R"([{"label": "i", "poly": [1, 0, 1]},
                    {"label": "f", "poly": [1, -3, 5, -5, 5, -3, 1]}])");
  auto cat = load_catalog(good.path);
  REQUIRE(cat.size() == 2);
  CHECK(cat[0].label == "i");
  CHECK(cat[1].poly.degree() == 6);
  CHECK(cat[0].provenance == "user-file");

  TempFile reducible(R"([{"label": "bad", "poly": [-1, 0, 1]}])");
  CHECK_THROWS_AS(load_catalog(reducible.path), domain_error);

  TempFile nonmonic(R"([{"label": "bad", "poly": [1, 0, 2]}])");
  CHECK_THROWS_AS(load_catalog(nonmonic.path), domain_error);

  TempFile dup(R"([{"label": "a", "poly": [1, 0, 1]},
                   {"label": "a", "poly": [2, 0, 1]}])");
  CHECK_THROWS_AS(load_catalog(dup.path), domain_error);

  TempFile junk("not json");
  CHECK_THROWS_AS(load_catalog(junk.path), domain_error);
}

TEST_CASE("builtin catalog shape") {
  auto cat = builtin_catalog({8});
  REQUIRE(cat.size() >= 7);
  CHECK(cat[0].label == "paper-f");
  CHECK(cat[1].label == "paper-g");
  int surds = 0;
  for (const auto& e : cat)
    if (e.provenance == "builtin-surd") {
      CHECK(e.poly.degree() == 8);
      CHECK(e.poly.is_monic());
      ++surds;
    }
  CHECK(surds >= 5);
  for (size_t i = 0; i < cat.size(); ++i)
    for (size_t j = i + 1; j < cat.size(); ++j)
      CHECK(cat[i].label != cat[j].label);
  CHECK_THROWS_AS(builtin_catalog({6}), domain_error);
}

TEST_CASE("sampling experiment is deterministic and audited") {
  auto cat = builtin_catalog({4});
  cat.resize(4);  // paper-f, paper-g, two quartic surd fields
  auto rep = sample_experiment(cat, 6, 3, 20260823);
  // paper-g is not Galois, so it is skipped rather than sampled
  REQUIRE(rep.skipped.size() == 1);
  CHECK(rep.skipped[0].find("paper-g") == 0);
  REQUIRE(rep.fields.size() == 3);
  CHECK(rep.total_samples == 18);
  for (const auto& st : rep.fields) {
    CHECK(st.samples == 6);
    CHECK(st.satisfied + st.failed + st.degenerate == st.samples);
    for (const auto& fl : st.failures) {
      CHECK(fl.relation.size() == 3);
      bool nonzero = false;
      for (const auto& c : fl.relation) nonzero = nonzero || c != 0;
      CHECK(nonzero);
    }
  }

  auto rep2 = sample_experiment(cat, 6, 3, 20260823);
  CHECK(experiment_to_json(rep) == experiment_to_json(rep2));

  auto rep3 = sample_experiment(cat, 6, 3, 20260824);
  CHECK(experiment_to_json(rep) != experiment_to_json(rep3));
}

TEST_CASE("R = 0 samples are all degenerate") {
  auto cat = builtin_catalog({});
  auto rep = sample_experiment(cat, 3, 0, 1);
  REQUIRE(rep.fields.size() == 1);  // only paper-f survives the Galois filter
  CHECK(rep.fields[0].degenerate == 3);
  CHECK(rep.total_satisfied == 0);
  CHECK(rep.total_failed == 0);
}

TEST_CASE("golden suite passes") {
  auto rep = golden_suite();
  for (const auto& c : rep.checks) {
    INFO(c.name, ": ", c.detail);
    CHECK(c.pass);
  }
  CHECK(rep.all_pass);
  CHECK(rep.checks.size() >= 18);
}
