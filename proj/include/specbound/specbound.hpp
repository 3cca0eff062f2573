#pragma once

#include "specbound/certify.hpp"
#include "specbound/explore.hpp"
#include "specbound/frame.hpp"
#include "specbound/graph.hpp"
#include "specbound/graph6.hpp"
#include "specbound/jacobi.hpp"
#include "specbound/report.hpp"
#include "specbound/rng.hpp"
#include "specbound/sym_matrix.hpp"
