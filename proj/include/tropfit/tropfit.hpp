#pragma once

#include "tropfit/approx.hpp"
#include "tropfit/error.hpp"
#include "tropfit/linalg.hpp"
#include "tropfit/rational.hpp"
#include "tropfit/search.hpp"
#include "tropfit/semifield.hpp"
#include "tropfit/solvers.hpp"
#include "tropfit/version.hpp"
