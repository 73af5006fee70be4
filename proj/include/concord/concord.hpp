// Umbrella header.
#ifndef CONCORD_CONCORD_HPP
#define CONCORD_CONCORD_HPP

#include "concord/address.hpp"
#include "concord/adapt.hpp"
#include "concord/aggregate.hpp"
#include "concord/collation.hpp"
#include "concord/config.hpp"
#include "concord/diagnostics.hpp"
#include "concord/pipeline.hpp"
#include "concord/render.hpp"
#include "concord/table.hpp"

#endif
