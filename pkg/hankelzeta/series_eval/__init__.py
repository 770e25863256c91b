# series_eval - 三类级数的闭式与暴力求和预言机

from hankelzeta.series_eval.series import (
    Family, SeriesConfig, SeriesQuery, lemma4_antiderivative, lerch_series_closed, s_closed,
    s_closed_log_gamma_form, s_t_derivative, series_bruteforce, t_closed,
)

__all__ = [
    'Family', 'SeriesConfig', 'SeriesQuery', 'lemma4_antiderivative', 'lerch_series_closed',
    's_closed', 's_closed_log_gamma_form', 's_t_derivative', 'series_bruteforce', 't_closed',
]
