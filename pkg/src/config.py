from functools import lru_cache
from pathlib import Path
from typing import Dict, List, Optional

import yaml
from pydantic import BaseModel
from pydantic_settings import BaseSettings, SettingsConfigDict

PROJECT_ROOT = Path(__file__).resolve().parent.parent


class Settings(BaseSettings):

    # Engine
    default_prime: int = 17
    default_qs: List[int] = [3, 5, 7, 9, 17, 25]

    # Sampling loops (one fixed generator seed for every loop)
    sample_seed: int = 20240917
    jacobi_samples: int = 500
    h_agreement_samples: int = 100
    commutator_samples: int = 200
    theorem_sweep_limit: int = 1000

    # Logging
    log_level: str = "INFO"
    log_file: str = "logs/chevkit.log"
    log_to_file: bool = True

    # Paths
    constants_path: str = str(PROJECT_ROOT / "configs" / "reference_values.yaml")
    report_dir: str = "reports"

    # CHEVKIT_SEED and friends are tolerated, never read
    model_config = SettingsConfigDict(
        env_file=".env",
        env_prefix="CHEVKIT_",
        case_sensitive=False,
        extra="ignore",
    )


settings = Settings()


class StructureRow(BaseModel):
    class_label: str
    descriptor: str
    derived_in_source: bool = True


class ReferenceValues(BaseModel):
    """Fixed reference values loaded from configs/reference_values.yaml"""

    involution_table: Dict[str, int]
    census_counts: Dict[str, int]
    census_lift_orders: Dict[str, int]
    f_word_roots: List[str]
    structure_table: List[StructureRow]
    theorem_spot_rows: Dict[str, str]

    def label_for_dimension(self, dim: int) -> str:
        for label, value in self.involution_table.items():
            if value == dim:
                return label
        raise KeyError(dim)

    def structure_row(self, class_label: str) -> StructureRow:
        for row in self.structure_table:
            if row.class_label == class_label:
                return row
        raise KeyError(class_label)


@lru_cache(maxsize=None)
def load_reference_values(path: Optional[str] = None) -> ReferenceValues:
    source = Path(path or settings.constants_path)
    with source.open("r", encoding="utf-8") as handle:
        raw = yaml.safe_load(handle)
    return ReferenceValues.model_validate(raw)
