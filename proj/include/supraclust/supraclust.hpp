#pragma once

#include "supraclust/clustering.hpp"
#include "supraclust/degrees.hpp"
#include "supraclust/errors.hpp"
#include "supraclust/generate.hpp"
#include "supraclust/index.hpp"
#include "supraclust/ingest.hpp"
#include "supraclust/network.hpp"
#include "supraclust/pipeline.hpp"
#include "supraclust/report.hpp"
#include "supraclust/triangles.hpp"
