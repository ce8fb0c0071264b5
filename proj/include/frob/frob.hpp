#pragma once

#include "frob/bounds.hpp"
#include "frob/counterexamples.hpp"
#include "frob/csv.hpp"
#include "frob/error.hpp"
#include "frob/frobenius.hpp"
#include "frob/montecarlo.hpp"
#include "frob/sampling.hpp"
#include "frob/subquadratic.hpp"
#include "frob/vectors.hpp"
