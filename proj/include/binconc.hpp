#pragma once

#include "binconc/exact_prob.hpp"
#include "binconc/binomial.hpp"
#include "binconc/concentration.hpp"
#include "binconc/normal.hpp"
#include "binconc/berry_esseen.hpp"
#include "binconc/case_certificates.hpp"
#include "binconc/rademacher.hpp"
#include "binconc/report.hpp"
#include "binconc/table.hpp"
#include "binconc/verify.hpp"
