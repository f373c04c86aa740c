# Copyright 2026 The mixsig Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Revenue-optimal signaling for probabilistic second-price auctions.

Rationals are fractions.Fraction. A signal is a dict {type: mass}; a scheme
is a list of signals; psi-matrices are lists of rows, one per bidder.
"""

from mixsig._core import (
    AuctionInstance,
    MixsigError,
    absorb_singletons,
    benchmarks,
    build_psi,
    equalize_bids,
    figure2_psi,
    from_divisible,
    gap_instance,
    identity_instance,
    lower_bound_certificate,
    merge_signals,
    optimal_mixed,
    optimal_pure,
    parse_instance,
    random_instance,
    revenue_upper_bound,
    scheme_revenue,
    signal_bids,
    signal_revenue,
    solve_report,
    winner_tables,
    write_instance,
)

__version__ = "0.1.0"
