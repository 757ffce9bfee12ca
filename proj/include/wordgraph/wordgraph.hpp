#pragma once

// Convenience umbrella for the whole library.

#include "wordgraph/build.hpp"
#include "wordgraph/corpus.hpp"
#include "wordgraph/errors.hpp"
#include "wordgraph/eval.hpp"
#include "wordgraph/graph.hpp"
#include "wordgraph/graph_io.hpp"
#include "wordgraph/ranking.hpp"
#include "wordgraph/stats.hpp"
#include "wordgraph/transform.hpp"
#include "wordgraph/wordrank.hpp"
