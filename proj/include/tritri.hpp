// Umbrella header.
#pragma once

#include "tritri/arith.hpp"
#include "tritri/bounds.hpp"
#include "tritri/cache.hpp"
#include "tritri/classify.hpp"
#include "tritri/forms.hpp"
#include "tritri/golden.hpp"
#include "tritri/local.hpp"
#include "tritri/parallel.hpp"
#include "tritri/proofcheck.hpp"
#include "tritri/represent.hpp"
#include "tritri/scan.hpp"
#include "tritri/watson.hpp"
