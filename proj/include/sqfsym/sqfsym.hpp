#ifndef SQFSYM_SQFSYM_HPP
#define SQFSYM_SQFSYM_HPP

#include "betti.hpp"
#include "corpus.hpp"
#include "error.hpp"
#include "exact_rank.hpp"
#include "graph.hpp"
#include "graph_io.hpp"
#include "homology.hpp"
#include "ideal.hpp"
#include "invariants.hpp"
#include "verifier.hpp"
#include "vertex_set.hpp"

#endif
