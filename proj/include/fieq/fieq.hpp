#pragma once

#include "fieq/algebra.hpp"
#include "fieq/connectives.hpp"
#include "fieq/constructors.hpp"
#include "fieq/errors.hpp"
#include "fieq/expr.hpp"
#include "fieq/finite_lattice.hpp"
#include "fieq/generators.hpp"
#include "fieq/implications.hpp"
#include "fieq/json_report.hpp"
#include "fieq/report.hpp"
#include "fieq/unit.hpp"
