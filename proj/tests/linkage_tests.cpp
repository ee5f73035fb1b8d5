#include <catch2/catch_amalgamated.hpp>
#include "charp/charp.hpp"
#include "support.hpp"
