#ifndef IPG_IPG_HPP
#define IPG_IPG_HPP

#include "ipg/applications.hpp"
#include "ipg/budgets.hpp"
#include "ipg/codecs.hpp"
#include "ipg/corpus.hpp"
#include "ipg/graph_data.hpp"
#include "ipg/implicit_graph.hpp"
#include "ipg/implicit_search.hpp"
#include "ipg/meter.hpp"
#include "ipg/mst.hpp"
#include "ipg/oracle.hpp"
#include "ipg/pointer_structure.hpp"
#include "ipg/rom_graph.hpp"
#include "ipg/rotate_adapter.hpp"
#include "ipg/rotate_graph.hpp"
#include "ipg/rotate_search.hpp"
#include "ipg/search.hpp"
#include "ipg/traversal.hpp"
#include "ipg/trit_array.hpp"
#include "ipg/types.hpp"

#endif  // IPG_IPG_HPP
