#pragma once

#include "coxgrowth/error.hpp"
#include "coxgrowth/polynomial.hpp"
#include "coxgrowth/cyclotomic.hpp"
#include "coxgrowth/sturm.hpp"
#include "coxgrowth/unit_disk.hpp"
#include "coxgrowth/inclusion.hpp"
#include "coxgrowth/diagram.hpp"
#include "coxgrowth/sphericity.hpp"
#include "coxgrowth/growth.hpp"
#include "coxgrowth/algnum.hpp"
#include "coxgrowth/sequences.hpp"
#include "coxgrowth/enumerate.hpp"
#include "coxgrowth/parallel.hpp"
#include "coxgrowth/families.hpp"
#include "coxgrowth/json_io.hpp"
#include "coxgrowth/report.hpp"
#include "coxgrowth/verify.hpp"
