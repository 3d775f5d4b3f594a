#pragma once

#include "korenblum/annulus_distance.hpp"
#include "korenblum/bound_engine.hpp"
#include "korenblum/certification.hpp"
#include "korenblum/errors.hpp"
#include "korenblum/factors.hpp"
#include "korenblum/laurent.hpp"
#include "korenblum/metrics.hpp"
#include "korenblum/oracle_harness.hpp"
#include "korenblum/property_suites.hpp"
#include "korenblum/quadrature.hpp"
