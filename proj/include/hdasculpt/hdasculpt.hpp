#pragma once

#include "hdasculpt/error.hpp"
#include "hdasculpt/precubical.hpp"
#include "hdasculpt/path.hpp"
#include "hdasculpt/eventset.hpp"
#include "hdasculpt/partition.hpp"
#include "hdasculpt/events.hpp"
#include "hdasculpt/st.hpp"
#include "hdasculpt/chu.hpp"
#include "hdasculpt/bulk.hpp"
#include "hdasculpt/cover.hpp"
#include "hdasculpt/decide.hpp"
#include "hdasculpt/grid.hpp"
#include "hdasculpt/pv.hpp"
#include "hdasculpt/io.hpp"
#include "hdasculpt/corpus.hpp"
#include "hdasculpt/random.hpp"
#include "hdasculpt/render.hpp"
