#include "lipsync/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace lipsync {

uint64_t Rng::next_u64() {
  state_ += 0x9e3779b97f4a7c15ull;
  uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

int Rng::uniform_int(int n) {
  if (n <= 0) throw std::invalid_argument("uniform_int: n must be positive");
  return static_cast<int>(next_u64() % static_cast<uint64_t>(n));
}

double Rng::normal() {
  double u1 = uniform();
  double u2 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

Rng Rng::fork(uint64_t stream) const {
  Rng seeder(state_ ^ (stream * 0xd1342543de82ef95ull + 0x2545f4914f6cdd1dull));
  return Rng(seeder.next_u64());
}

}  // namespace lipsync
