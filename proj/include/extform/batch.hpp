#pragma once

#include <vector>

#include "extform/invariants.hpp"
#include "extform/threeform6.hpp"

namespace extform {

// Batch kernels over independent inputs. Every element is a pure-function
// evaluation on immutable values, so the OpenMP variants parallelize the
// outer loop; the *_serial twins are the reference implementations the tests
// and the benchmark compare against.
std::vector<FormProfile> profile_many(const std::vector<ExteriorForm>& forms);
std::vector<FormProfile> profile_many_serial(
    const std::vector<ExteriorForm>& forms);

std::vector<ThreeFormType> classify_types_many(
    const std::vector<ExteriorForm>& forms);
std::vector<ThreeFormType> classify_types_many_serial(
    const std::vector<ExteriorForm>& forms);

}  // namespace extform
