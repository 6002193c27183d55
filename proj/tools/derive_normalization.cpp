// Writes the cached normalization constants c~_n with the sampling parameters
// that produced them, so every stored value can be re-derived and audited.
#include <cstdlib>
#include <iostream>

#include <nlohmann/json.hpp>

#include "ternary/elimination.hpp"

namespace {

nlohmann::json factor(mpz_class n) {
  nlohmann::json out = nlohmann::json::object();
  for (unsigned long p = 2; n > 1 && p < 100000; ++p) {
    unsigned e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      n /= p;
      ++e;
    }
    if (e > 0) out[std::to_string(p)] = e;
  }
  if (n > 1) out[n.get_str()] = 1;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const unsigned max_n = argc > 1 ? static_cast<unsigned>(std::atoi(argv[1])) : 6;
  constexpr std::uint64_t kSeed = 1;
  constexpr unsigned kSamples = 64;
  constexpr long kBound = 10;
  nlohmann::json constants = nlohmann::json::object();
  for (unsigned n = 2; n <= max_n; ++n) {
    const mpz_class c = ternary::derive_normalization_constant(n, kSeed, kSamples, kBound);
    constants[std::to_string(n)] = {{"value", c.get_str()}, {"factorization", factor(c)}};
    std::cerr << "n=" << n << " c=" << c << "\n";
  }
  nlohmann::json doc{
      {"description", "gcd of raw resultants of partials over sampled integer forms; sign positive"},
      {"derivation", {{"seed", kSeed}, {"samples", kSamples}, {"coefficient_bound", kBound},
                      {"tool", "derive_normalization"}}},
      {"constants", constants}};
  std::cout << doc.dump(2) << "\n";
}
