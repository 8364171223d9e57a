#include <cstdlib>
#include <string_view>
#include <vector>

#include "swforge/simd.hpp"

namespace swforge::simd {
namespace {

std::vector<const KernelSet*> detect() {
  std::vector<const KernelSet*> sets{&scalar_kernels()};
  for (const KernelSet* k : {detail::sse2_kernels(), detail::avx2_kernels(), detail::neon_kernels()})
    if (k != nullptr) sets.push_back(k);
  return sets;
}

const std::vector<const KernelSet*>& registry() {
  static const std::vector<const KernelSet*> sets = detect();
  return sets;
}

const KernelSet& choose() {
  const auto& sets = registry();
  if (const char* forced = std::getenv("SW_FORGE_SIMD")) {
    for (const KernelSet* k : sets)
      if (k->name == std::string_view(forced)) return *k;
  }
  return *sets.back();
}

}  // namespace

std::span<const KernelSet* const> available_kernels() noexcept { return registry(); }

const KernelSet& active_kernels() noexcept {
  static const KernelSet& chosen = choose();
  return chosen;
}

}  // namespace swforge::simd
