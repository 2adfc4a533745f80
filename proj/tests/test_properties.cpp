#include <catch2/catch_amalgamated.hpp>

#include "support/properties.hpp"

namespace {

void check(const props::Result& r) {
  INFO(r.name << ": " << r.failures << " of " << r.cases << " failed; first: "
               << r.first_failure);
  CHECK(r.cases == props::kCases);
  CHECK(r.ok());
}

}  // namespace

TEST_CASE("orders are total and monotone", "[properties]") {
  check(props::order_properties());
}

TEST_CASE("normal forms are idempotent and class-constant", "[properties]") {
  check(props::normal_form_properties());
}

TEST_CASE("oracle certificates replay and are optimal", "[properties]") {
  check(props::certificate_properties());
}

TEST_CASE("oracle verdicts agree with normal forms", "[properties]") {
  check(props::oracle_consistency());
}
