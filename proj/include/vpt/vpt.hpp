#pragma once

#include "branch_graph.hpp"
#include "chordal.hpp"
#include "classifier.hpp"
#include "cliques.hpp"
#include "coloring.hpp"
#include "errors.hpp"
#include "gh.hpp"
#include "graph.hpp"
#include "graph_io.hpp"
#include "isomorphism.hpp"
#include "oracle.hpp"
#include "parallel.hpp"
#include "representation.hpp"
#include "split.hpp"
#include "trees.hpp"
