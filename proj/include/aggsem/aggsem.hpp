#ifndef AGGSEM_AGGSEM_HPP
#define AGGSEM_AGGSEM_HPP

#include <aggsem/analysis.hpp>
#include <aggsem/bounds.hpp>
#include <aggsem/error.hpp>
#include <aggsem/eval2.hpp>
#include <aggsem/fixpoints.hpp>
#include <aggsem/interp.hpp>
#include <aggsem/oracle.hpp>
#include <aggsem/parser.hpp>
#include <aggsem/random.hpp>
#include <aggsem/syntax.hpp>
#include <aggsem/ternary.hpp>
#include <aggsem/truth.hpp>

#endif
