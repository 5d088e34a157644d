import sys
import os

# Add current directory to Python path
current_dir = os.path.dirname(os.path.abspath(__file__))
sys.path.insert(0, current_dir)

print('=== Tensor Kleene Algebra Toolkit Smoke Test ===')
print(f'Working Directory: {current_dir}')

try:
    print('1. Testing core imports...')
    from src.kleene import regex_parse
    from src.rewriting import nf_reduce
    from src.tensor import enumerate_nf_image
    print('OK core packages imported')

    print('2. Testing CLI import...')
    from src.interfaces.cli import dispatch
    print('OK CLI imported')

    print('3. Testing one operation...')
    image = enumerate_nf_image(regex_parse("p0 (a p1)* (q1 b)* q0"), 10)
    print(f'OK image: {image.lines()}')

    print('4. Testing CLI dispatch...')
    status = dispatch(['nf', 'p1 a q1'])
    print(f'OK exit status {status}')

    print('')
    print('ALL SMOKE TESTS PASSED')

except Exception as e:
    print(f'Error: {e}')
    import traceback
    traceback.print_exc()
