#include "doctest.h"
#include "cmh/numthy.hpp"
TEST_CASE("placeholder") { CHECK(cmh::numthy::kronecker(-7, 2) == 1); }
