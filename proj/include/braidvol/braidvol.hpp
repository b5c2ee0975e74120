#pragma once

#include "braidvol/braid_word.hpp"
#include "braidvol/all_a_state.hpp"
#include "braidvol/hypotheses.hpp"
#include "braidvol/bounds.hpp"
#include "braidvol/schreier.hpp"
#include "braidvol/laurent.hpp"
#include "braidvol/jones_oracle.hpp"
#include "braidvol/generator.hpp"
#include "braidvol/svg.hpp"
#include "braidvol/report.hpp"
#include "braidvol/verify.hpp"
