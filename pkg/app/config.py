"""
Toolkit configuration loaded from environment variables.
Uses pydantic-settings for typed, validated config.
"""

from pydantic_settings import BaseSettings, SettingsConfigDict  # type: ignore


class Settings(BaseSettings):
    """Defaults for every tunable of the toolkit. Override with ROOTJET_* variables."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_prefix="ROOTJET_",
        case_sensitive=False,
    )

    # ── App ───────────────────────────────────────────────────
    app_name: str = "rootjet"
    log_level: str = "INFO"

    # ── Iteration defaults ────────────────────────────────────
    atol: float = 1e-13
    rtol: float = 1e-13
    ftol: float = 1e-16     # only near-exact hits short-circuit the step test
    max_steps: int = 2_000_000
    x_max: float = 1e12
    trace_limit: int = 64   # most recent iterates kept in a report

    # ── Method construction ───────────────────────────────────
    max_order: int = 8
    root_sanity_tol: float = 1e-9

    # ── Bench ─────────────────────────────────────────────────
    timing_repetitions: int = 100
    timing_budget_s: float = 2.0
    bench_workers: int = 4

    # ── Extended precision ────────────────────────────────────
    extended_dps: int = 120


# Singleton: import this wherever config is needed
settings = Settings()  # type: ignore[call-arg]
