from src.config import settings
from src.logger import logger
from src.verification import check_construction


def smoke_construction():
    logger.info("=== CONSTRUCTION SMOKE TEST ===")
    result = check_construction(settings.default_prime)
    field = result.details.get("field", {})
    print(f"{result.name}: {result.status.value.upper()}")
    print(f"Field: GF({field.get('p')}^{field.get('k')})")
    if result.passed:
        print(f"Fixed dims: {result.details['fixed_dims']}, common: {result.details['common_fixed_dim']}")
    else:
        print(f"Failed: {result.details.get('error') or result.details.get('assertions')}")
    logger.info("Smoke test complete")
    return result.passed


if __name__ == "__main__":
    raise SystemExit(0 if smoke_construction() else 1)
