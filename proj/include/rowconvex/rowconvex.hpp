#ifndef ROWCONVEX_ROWCONVEX_HPP
#define ROWCONVEX_ROWCONVEX_HPP

#include "rowconvex/error.hpp"
#include "rowconvex/alphabet.hpp"
#include "rowconvex/shape.hpp"
#include "rowconvex/tableau.hpp"
#include "rowconvex/rational.hpp"
#include "rowconvex/letterplace.hpp"
#include "rowconvex/straightening.hpp"
#include "rowconvex/basis.hpp"
#include "rowconvex/ring.hpp"
#include "rowconvex/branching.hpp"

#endif // ROWCONVEX_ROWCONVEX_HPP
