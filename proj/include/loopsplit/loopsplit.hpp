#pragma once

#include "bundles.hpp"
#include "catalog.hpp"
#include "characters.hpp"
#include "cli.hpp"
#include "graded_module.hpp"
#include "parallel.hpp"
#include "report.hpp"
#include "spaces.hpp"
#include "sphere_bundle.hpp"
#include "splitting.hpp"
#include "thom.hpp"
#include "trunc_poly.hpp"
#include "witnesses.hpp"
