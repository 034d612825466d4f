// cliquex.hpp - umbrella header for the whole library
#pragma once

#include "cliquex/asymptotics.hpp"
#include "cliquex/cliques.hpp"
#include "cliquex/errors.hpp"
#include "cliquex/expectation.hpp"
#include "cliquex/graph.hpp"
#include "cliquex/hypergraph.hpp"
#include "cliquex/montecarlo.hpp"
#include "cliquex/numerics.hpp"
#include "cliquex/oracle.hpp"
#include "cliquex/parse.hpp"
#include "cliquex/rational.hpp"
#include "cliquex/real.hpp"
#include "cliquex/sampling.hpp"
