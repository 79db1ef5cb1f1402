#pragma once

#include <binwaring/common/errors.hpp>
#include <binwaring/common/rational.hpp>
#include <binwaring/decompose/report.hpp>
#include <binwaring/decompose/search.hpp>
#include <binwaring/decompose/sweep.hpp>
#include <binwaring/decompose/sylvester.hpp>
#include <binwaring/polyform/binary_form.hpp>
#include <binwaring/polyform/parse.hpp>
#include <binwaring/polyform/power_sum.hpp>
#include <binwaring/quadsig/inertia.hpp>
#include <binwaring/quadsig/matrix.hpp>
#include <binwaring/realroots/exact_real.hpp>
#include <binwaring/realroots/factor_count.hpp>
#include <binwaring/realroots/interval.hpp>
#include <binwaring/realroots/real_algebraic.hpp>
#include <binwaring/realroots/sturm.hpp>
#include <binwaring/realroots/unipoly.hpp>
