#include "properties.hpp"

#include <doctest.h>

namespace {

void check_empty(const props::Problems& p) {
  CHECK_MESSAGE(p.empty(), (p.empty() ? std::string() : p.front()) << " (" << p.size() << " problems)");
}

}  // namespace

TEST_CASE("normal forms: idempotent congruence") {
  for (long long m = 3; m <= 8; ++m) {
    INFO("m=" << m);
    check_empty(props::normal_forms(m, 10000, 1000 + static_cast<std::uint64_t>(m)));
  }
}

TEST_CASE("reflection words are palindromes") { check_empty(props::palindromes(200)); }

TEST_CASE("canonical chains round-trip and keep their shape") {
  for (long long m = 3; m <= 8; ++m) {
    INFO("m=" << m);
    check_empty(props::chains(m, 300));
  }
}
