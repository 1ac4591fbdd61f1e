#pragma once

#include "skewpbw/armendariz.hpp"
#include "skewpbw/classify.hpp"
#include "skewpbw/compat.hpp"
#include "skewpbw/corpus.hpp"
#include "skewpbw/error.hpp"
#include "skewpbw/extension.hpp"
#include "skewpbw/graded.hpp"
#include "skewpbw/harness.hpp"
#include "skewpbw/io.hpp"
#include "skewpbw/maps.hpp"
#include "skewpbw/nilpotency.hpp"
#include "skewpbw/polynomial.hpp"
#include "skewpbw/radicals.hpp"
#include "skewpbw/ring.hpp"
