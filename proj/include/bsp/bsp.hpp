#ifndef BSP_BSP_HPP
#define BSP_BSP_HPP

#include "decompose.hpp"
#include "errors.hpp"
#include "families.hpp"
#include "gadget.hpp"
#include "graph.hpp"
#include "grf.hpp"
#include "homogeneous.hpp"
#include "partition.hpp"
#include "paths.hpp"
#include "recognize.hpp"
#include "twojoin.hpp"
#include "vertex_set.hpp"

namespace bsp {
inline constexpr const char* version = "0.1.0";
}

#endif
