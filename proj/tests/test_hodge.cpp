#include <catch2/catch_amalgamated.hpp>
#include "helwave/helwave.hpp"
TEST_CASE("placeholder test_hodge") { CHECK(true); }
