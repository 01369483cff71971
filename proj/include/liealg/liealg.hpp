#ifndef LIEALG_LIEALG_HPP
#define LIEALG_LIEALG_HPP

#include "liealg/error.hpp"
#include "liealg/scalar.hpp"
#include "liealg/linalg.hpp"
#include "liealg/algebra.hpp"
#include "liealg/module.hpp"
#include "liealg/weight.hpp"
#include "liealg/solver.hpp"
#include "liealg/lemmas.hpp"
#include "liealg/oracle.hpp"
#include "liealg/io.hpp"
#include "liealg/generator.hpp"
#include "liealg/verify.hpp"

#endif
