#pragma once

#include "uniorb/catalog.hpp"
#include "uniorb/class_group.hpp"
#include "uniorb/cox_sim.hpp"
#include "uniorb/demazure.hpp"
#include "uniorb/error.hpp"
#include "uniorb/exact_linalg.hpp"
#include "uniorb/fan.hpp"
#include "uniorb/monoid.hpp"
#include "uniorb/orbit_engine.hpp"
#include "uniorb/radiance.hpp"
#include "uniorb/report.hpp"
