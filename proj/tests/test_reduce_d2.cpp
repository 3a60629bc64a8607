#include <doctest.h>
#include "pcf/reduce_d2.hpp"
TEST_CASE("placeholder") { CHECK(true); }
