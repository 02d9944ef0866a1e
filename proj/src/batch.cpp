#include "extform/batch.hpp"

#include <omp.h>

namespace extform {

std::vector<FormProfile> profile_many(const std::vector<ExteriorForm>& forms) {
  std::vector<FormProfile> out(forms.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (long i = 0; i < static_cast<long>(forms.size()); ++i)
    out[i] = profile(forms[i]);
  return out;
}

std::vector<FormProfile> profile_many_serial(
    const std::vector<ExteriorForm>& forms) {
  std::vector<FormProfile> out(forms.size());
  for (std::size_t i = 0; i < forms.size(); ++i) out[i] = profile(forms[i]);
  return out;
}

std::vector<ThreeFormType> classify_types_many(
    const std::vector<ExteriorForm>& forms) {
  std::vector<ThreeFormType> out(forms.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (long i = 0; i < static_cast<long>(forms.size()); ++i)
    out[i] = classify(forms[i]).type;
  return out;
}

std::vector<ThreeFormType> classify_types_many_serial(
    const std::vector<ExteriorForm>& forms) {
  std::vector<ThreeFormType> out(forms.size());
  for (std::size_t i = 0; i < forms.size(); ++i) out[i] = classify(forms[i]).type;
  return out;
}

}  // namespace extform
