#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>

#include <nlohmann/json.hpp>

#include "ternary/elimination.hpp"
#include "ternary/error.hpp"
#include "ternary/random.hpp"

#ifndef TERNARY_DATA_DIR
#define TERNARY_DATA_DIR "data"
#endif

namespace ternary {

namespace {

std::mutex cache_mutex;
std::map<unsigned, mpz_class>* cache = nullptr;

void load_cache_locked() {
  cache = new std::map<unsigned, mpz_class>();
  std::ifstream in(normalization_data_path());
  if (!in) return;  // absent file: derive on demand
  nlohmann::json j;
  try {
    in >> j;
    for (const auto& [key, entry] : j.at("constants").items()) {
      (*cache)[static_cast<unsigned>(std::stoul(key))] = mpz_class(entry.at("value").get<std::string>());
    }
  } catch (const std::exception& e) {
    throw ParseError(normalization_data_path() + ": " + e.what());
  }
}

}  // namespace

std::string normalization_data_path() {
  if (const char* dir = std::getenv("TERNARY_DATA_DIR")) return std::string(dir) + "/normalization.json";
  return std::string(TERNARY_DATA_DIR) + "/normalization.json";
}

mpz_class derive_normalization_constant(unsigned n, std::uint64_t seed, unsigned samples, long bound) {
  if (n < 2) throw Error("degree_too_small", "normalization needs degree >= 2");
  Rng rng(seed * 1000003ULL + n);
  mpz_class g = 0;
  for (unsigned s = 0; s < samples; ++s) {
    const MultiPoly f = random_form(rng, VarSet::xyz(), Domain::integers(), n, bound);
    if (f.is_zero()) continue;
    const mpz_class raw = discriminant_n(f, false).raw.integer_value();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), raw.get_mpz_t());
  }
  if (g == 0) throw Error("degenerate_sample", "every sampled form was singular");
  return g;
}

mpz_class normalization_constant(unsigned n) {
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    if (!cache) load_cache_locked();
    if (auto it = cache->find(n); it != cache->end()) return it->second;
  }
  // Derive outside the lock; concurrent derivations agree, so the race is benign.
  const mpz_class c = derive_normalization_constant(n);
  std::lock_guard<std::mutex> lock(cache_mutex);
  return cache->emplace(n, c).first->second;
}

}  // namespace ternary
