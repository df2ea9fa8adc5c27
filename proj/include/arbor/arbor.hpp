#ifndef ARBOR_ARBOR_HPP
#define ARBOR_ARBOR_HPP

#include "arbor/error.hpp"
#include "arbor/digraph.hpp"
#include "arbor/arborescence.hpp"
#include "arbor/normality.hpp"
#include "arbor/sensitive.hpp"
#include "arbor/dfs.hpp"
#include "arbor/separation.hpp"
#include "arbor/family.hpp"
#include "arbor/jung.hpp"
#include "arbor/ends.hpp"
#include "arbor/horizon.hpp"
#include "arbor/io.hpp"

#endif
