#pragma once

#include "bounds.hpp"
#include "canonical.hpp"
#include "degree_function.hpp"
#include "enumerate.hpp"
#include "error.hpp"
#include "extremal.hpp"
#include "graph.hpp"
#include "indices.hpp"
#include "rational.hpp"
#include "verifier.hpp"
