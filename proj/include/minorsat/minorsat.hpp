#pragma once

#include "minorsat/certificates.hpp"
#include "minorsat/constructions.hpp"
#include "minorsat/graph.hpp"
#include "minorsat/minor.hpp"
#include "minorsat/paper_bundles.hpp"
#include "minorsat/rational.hpp"
#include "minorsat/saturation.hpp"
