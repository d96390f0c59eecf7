import os
import django
from django.core.management import call_command
from django.core.management.base import CommandError

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'bialternant_system.settings')
django.setup()


def verify():
    # 1. A character
    print("Computing Sp_3((1); x1; z)...")
    call_command('char', 'osp', lam='1', n=1)

    # 2. A small table
    print("Tabulating odd symplectic characters in the 2 x 1 box at n=1...")
    call_command('table', 'osp', max_len=2, max_part=1, n=1)

    # 3. The oracle
    print("Expanding the Cauchy kernel at n=1...")
    call_command('oracle', n=1, degree=3)

    # 4. A few identities
    for check, options in [
        ('osp-den', {'n': 2}),
        ('bkw', {'m': 1, 'n': 1, 'r': 1}),
        ('key-lemma', {'n': 2, 'trials': 5, 'seed': 7}),
    ]:
        print(f"Verifying {check}...")
        try:
            call_command('verify', check, **options)
        except CommandError as e:
            print(f"Verification failed: {e}")
            return False

    print("Verification Successful!")
    return True


if __name__ == '__main__':
    verify()
