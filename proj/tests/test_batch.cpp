#include "doctest.h"
#include "extform/batch.hpp"
#include "extform/rng.hpp"

using namespace extform;

TEST_CASE("parallel and serial batch kernels agree") {
  Rng rng(71);
  std::vector<ExteriorForm> forms;
  for (int i = 0; i < 300; ++i) {
    int n = static_cast<int>(rng.uniform(1, 6));
    int p = static_cast<int>(rng.uniform(1, n));
    forms.push_back(rng.form(n, p, 4));
  }
  auto par = profile_many(forms);
  auto ser = profile_many_serial(forms);
  REQUIRE(par.size() == ser.size());
  for (std::size_t i = 0; i < par.size(); ++i) {
    CHECK(par[i].rank == ser[i].rank);
    CHECK(par[i].kernel == ser[i].kernel);
    CHECK(par[i].image == ser[i].image);
    CHECK(par[i].divisibility == ser[i].divisibility);
  }

  std::vector<ExteriorForm> threes;
  const auto types = {ThreeFormType::ComplexStable, ThreeFormType::Degenerate3,
                      ThreeFormType::RealStable, ThreeFormType::OneDivisor,
                      ThreeFormType::Decomposable};
  for (int rep = 0; rep < 10; ++rep)
    for (ThreeFormType t : types)
      threes.push_back(pullback(canonical_3form(t), rng.invertible(6)));
  CHECK(classify_types_many(threes) == classify_types_many_serial(threes));
}
