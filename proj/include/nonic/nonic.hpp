#ifndef NONIC_NONIC_HPP
#define NONIC_NONIC_HPP

#include "nonic/arith.hpp"
#include "nonic/closed_form.hpp"
#include "nonic/errors.hpp"
#include "nonic/field.hpp"
#include "nonic/glue.hpp"
#include "nonic/linalg.hpp"
#include "nonic/newton.hpp"
#include "nonic/oracle.hpp"
#include "nonic/poly.hpp"
#include "nonic/report.hpp"
#include "nonic/theta.hpp"

#endif
