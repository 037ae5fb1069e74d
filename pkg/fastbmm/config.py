import os

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

from fastbmm.utils import singleton


@singleton
class BmmSettings(BaseSettings):
    model_config = SettingsConfigDict(
        env_prefix="BMM_", env_file=".env", case_sensitive=False
    )

    WORKERS: int = Field(default_factory=lambda: os.cpu_count() or 1, ge=1)
    LOG_LEVEL: str = "WARNING"

    MAX_PARALLEL_LEVELS: int = Field(default=3, ge=0)
    MAX_SERIAL_LEVELS: int = Field(default=4, ge=0)
    LEVEL_SHIFTING: bool = True
    LEVEL_MERGING: bool = True
    KERNEL_BATCH_BLOCKS: int = Field(default=512, ge=1)  # 64x64 blocks per call

    BUFFER_POLL_SECONDS: float = Field(default=0.05, gt=0)
    PIPELINE_TIMEOUT_SECONDS: float = Field(default=600.0, gt=0)

    BENCH_REPEATS: int = Field(default=5, ge=1)


bmm_settings = BmmSettings()
