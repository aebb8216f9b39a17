#pragma once

#include "tomatomp/analytics.hpp"
#include "tomatomp/assignment.hpp"
#include "tomatomp/diagrams.hpp"
#include "tomatomp/error.hpp"
#include "tomatomp/graph.hpp"
#include "tomatomp/mma.hpp"
#include "tomatomp/multiparameter.hpp"
#include "tomatomp/parallel.hpp"
#include "tomatomp/scalar_field.hpp"
#include "tomatomp/slicing.hpp"
#include "tomatomp/tomato.hpp"
#include "tomatomp/union_find.hpp"
